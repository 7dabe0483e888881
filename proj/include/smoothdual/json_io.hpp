#pragma once

#include "json.hpp"

#include "smoothdual/bernstein.hpp"
#include "smoothdual/cohomology.hpp"
#include "smoothdual/parameters.hpp"
#include "smoothdual/qproj.hpp"
#include "smoothdual/rational.hpp"
#include "smoothdual/scalars.hpp"
#include "smoothdual/symfun.hpp"

// JSON encodings of the domain types. Readers throw ValidationError on malformed input.
namespace smoothdual::json_io {

using Json = nlohmann::ordered_json;

/// Rationals are written as "p/r" strings; readers also take JSON integers.
Json to_json(const Rational &r);
Rational rational_from(const Json &j);

/// {"q_exp": "p/r", "turn": "p/r"}; readers also accept the compact string form ("q^-1/2@1/4").
Json to_json(const QScalar &z);
QScalar qscalar_from(const Json &j);

Json to_json(const WeilLabel &rho);
WeilLabel weil_label_from(const Json &j);

Json to_json(const InertialClass &cls);
InertialClass inertial_class_from(const Json &j);

Json to_json(const LParameter &phi);
LParameter lparameter_from(const Json &j);

Json to_json(const OrbitDescriptor &o);
OrbitDescriptor orbit_from(const Json &j);

Json to_json(const Component &c);
Component component_from(const Json &j);

Json to_json(const Stratum &s);
Multipartition multipartition_from(const Json &j);

Json to_json(const PoincarePolynomial &p);

Json to_json(const StratumPoint &p);
StratumPoint stratum_point_from(const Json &j);

/// {"blocks": [[z, ...], ...]}; a bare array is read as a single block.
Json to_json(const SymPoint &y);
SymPoint sym_point_from(const Json &j);

Json to_json(const Complex &z);
Complex complex_from(const Json &j);

} // namespace smoothdual::json_io
