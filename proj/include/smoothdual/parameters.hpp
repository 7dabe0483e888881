#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "smoothdual/rational.hpp"
#include "smoothdual/scalars.hpp"

namespace smoothdual {

/*
 * An irreducible Weil representation, kept opaque. Only its identity,
 * dimension and whether its determinant is unitary enter any formula.
 * Distinct ids are treated as inertially inequivalent.
 */
struct WeilLabel {
    std::string id;
    int dim = 1;
    bool unitary_det = true;

    static WeilLabel trivial() { return {"triv", 1, true}; }

    friend bool operator==(const WeilLabel &, const WeilLabel &) = default;
    friend std::strong_ordering operator<=>(const WeilLabel &, const WeilLabel &) = default;
};

/// rho (x) spin(j), up to unramified twist. spin(j) has dimension 2j+1.
class InertialClass {
public:
    InertialClass(WeilLabel rho, Rational spin_j);

    const WeilLabel &rho() const { return rho_; }
    const Rational &spin_j() const { return spin_j_; }
    /// 2j + 1
    int spin_dim() const { return static_cast<int>(2 * spin_j_.num() / spin_j_.den()) + 1; }
    int dimension() const { return rho_.dim * spin_dim(); }

    friend bool operator==(const InertialClass &, const InertialClass &) = default;
    friend std::strong_ordering operator<=>(const InertialClass &, const InertialClass &) = default;

private:
    WeilLabel rho_;
    Rational spin_j_;
};

struct Summand {
    InertialClass cls;
    QScalar twist;

    friend bool operator==(const Summand &, const Summand &) = default;
    friend std::strong_ordering operator<=>(const Summand &, const Summand &) = default;
};

/// A twisted direct sum of inertial classes, stored in canonical (sorted) order.
class LParameter {
public:
    explicit LParameter(std::vector<Summand> summands);

    const std::vector<Summand> &summands() const { return summands_; }

    friend bool operator==(const LParameter &, const LParameter &) = default;

private:
    std::vector<Summand> summands_;
};

/// An orbit under unramified twisting: distinct classes with multiplicities, sorted by class.
class OrbitDescriptor {
public:
    explicit OrbitDescriptor(std::vector<std::pair<InertialClass, int>> classes);

    const std::vector<std::pair<InertialClass, int>> &classes() const { return classes_; }
    /// Multiplicities l_1, ..., l_k in class order.
    std::vector<int> multiplicities() const;

    friend bool operator==(const OrbitDescriptor &, const OrbitDescriptor &) = default;
    friend auto operator<=>(const OrbitDescriptor &, const OrbitDescriptor &) = default;

private:
    std::vector<std::pair<InertialClass, int>> classes_;
};

/// Orbit shape A^l x (C^x)^k.
struct OrbitShape {
    int l = 0;
    int k = 0;
    friend bool operator==(const OrbitShape &, const OrbitShape &) = default;
};

int dimension(const LParameter &phi);
OrbitDescriptor orbit_of(const LParameter &phi);
OrbitShape orbit_shape(const OrbitDescriptor &o);

bool is_tempered(const LParameter &phi);
bool is_supercuspidal(const LParameter &phi);
bool is_discrete_series(const LParameter &phi);

/// Parameter of St(n): 1 (x) spin((n-1)/2), untwisted.
LParameter steinberg_parameter(int n);

} // namespace smoothdual
