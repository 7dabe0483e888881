#include "smoothdual/json_io.hpp"

#include "smoothdual/errors.hpp"

namespace smoothdual::json_io {

namespace {

const Json &field(const Json &j, const char *key)
{
    if (!j.is_object()) throw ValidationError(std::string("expected an object with field \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_from(const Json &j, const char *what)
{
    if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> partition_from(const Json &j)
{
    if (!j.is_array()) throw ValidationError("a partition must be an array of integers");
    std::vector<int> out;
    for (const auto &x : j) out.push_back(int_from(x, "partition part"));
    return out;
}

std::vector<QScalar> scalars_from(const Json &j)
{
    if (!j.is_array()) throw ValidationError("expected an array of scalars");
    std::vector<QScalar> out;
    for (const auto &x : j) out.push_back(qscalar_from(x));
    return out;
}

Json scalars_to(const std::vector<QScalar> &zs)
{
    Json arr = Json::array();
    for (const auto &z : zs) arr.push_back(to_json(z));
    return arr;
}

} // namespace

Json to_json(const Rational &r) { return r.str(); }

Rational rational_from(const Json &j)
{
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw ValidationError("rationals are written as \"p/r\" strings");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception &e) {
        throw ValidationError(e.what());
    }
}

Json to_json(const QScalar &z) { return Json{{"q_exp", to_json(z.q_exp())}, {"turn", to_json(z.turn())}}; }

QScalar qscalar_from(const Json &j)
{
    if (j.is_string()) return QScalar::parse(j.get<std::string>());
    if (j.is_number_integer() && j.get<std::int64_t>() == 1) return QScalar::one();
    Rational turn(0);
    if (j.is_object() && j.contains("turn")) turn = rational_from(j.at("turn"));
    return {rational_from(field(j, "q_exp")), turn};
}

Json to_json(const WeilLabel &rho) { return Json{{"id", rho.id}, {"dim", rho.dim}, {"unitary_det", rho.unitary_det}}; }

WeilLabel weil_label_from(const Json &j)
{
    WeilLabel rho;
    const Json &id = field(j, "id");
    if (!id.is_string()) throw ValidationError("label id must be a string");
    rho.id = id.get<std::string>();
    if (j.contains("dim")) rho.dim = int_from(j.at("dim"), "dim");
    if (j.contains("unitary_det")) {
        if (!j.at("unitary_det").is_boolean()) throw ValidationError("unitary_det must be a boolean");
        rho.unitary_det = j.at("unitary_det").get<bool>();
    }
    return rho;
}

Json to_json(const InertialClass &cls) { return Json{{"rho", to_json(cls.rho())}, {"j", to_json(cls.spin_j())}}; }

InertialClass inertial_class_from(const Json &j)
{
    return InertialClass(weil_label_from(field(j, "rho")), j.contains("j") ? rational_from(j.at("j")) : Rational(0));
}

Json to_json(const LParameter &phi)
{
    Json arr = Json::array();
    for (const auto &s : phi.summands()) {
        Json item = to_json(s.cls);
        item["twist"] = to_json(s.twist);
        arr.push_back(std::move(item));
    }
    return Json{{"summands", std::move(arr)}};
}

LParameter lparameter_from(const Json &j)
{
    const Json &arr = field(j, "summands");
    if (!arr.is_array()) throw ValidationError("summands must be an array");
    std::vector<Summand> summands;
    for (const auto &item : arr)
        summands.push_back(
            {inertial_class_from(item), item.contains("twist") ? qscalar_from(item.at("twist")) : QScalar::one()});
    return LParameter(std::move(summands));
}

Json to_json(const OrbitDescriptor &o)
{
    Json arr = Json::array();
    for (const auto &[cls, m] : o.classes()) {
        Json item = to_json(cls);
        item["multiplicity"] = m;
        arr.push_back(std::move(item));
    }
    const auto shape = orbit_shape(o);
    return Json{{"classes", std::move(arr)}, {"l", shape.l}, {"k", shape.k}};
}

OrbitDescriptor orbit_from(const Json &j)
{
    const Json &arr = field(j, "classes");
    if (!arr.is_array()) throw ValidationError("classes must be an array");
    std::vector<std::pair<InertialClass, int>> classes;
    for (const auto &item : arr)
        classes.emplace_back(inertial_class_from(item), int_from(field(item, "multiplicity"), "multiplicity"));
    return OrbitDescriptor(std::move(classes));
}

Json to_json(const Component &c)
{
    Json arr = Json::array();
    for (const auto &b : c.blocks()) {
        Json item{{"label", b.label}, {"exponent", b.exponent}};
        if (b.rho_dim != 1) item["rho_dim"] = b.rho_dim;
        if (b.q_step != Rational(1)) item["q_step"] = to_json(b.q_step);
        arr.push_back(std::move(item));
    }
    return Json{{"blocks", std::move(arr)}};
}

Component component_from(const Json &j)
{
    const Json &arr = field(j, "blocks");
    if (!arr.is_array()) throw ValidationError("blocks must be an array");
    std::vector<Block> blocks;
    for (const auto &item : arr) {
        Block b;
        const Json &label = field(item, "label");
        if (!label.is_string()) throw ValidationError("block label must be a string");
        b.label = label.get<std::string>();
        b.exponent = int_from(field(item, "exponent"), "exponent");
        if (item.contains("rho_dim")) b.rho_dim = int_from(item.at("rho_dim"), "rho_dim");
        if (item.contains("q_step")) b.q_step = rational_from(item.at("q_step"));
        blocks.push_back(std::move(b));
    }
    return Component(std::move(blocks));
}

Json to_json(const Stratum &s)
{
    Json residual = Json::array();
    for (const auto &f : s.residual_action())
        residual.push_back(Json{{"block", f.block}, {"cycle_length", f.cycle_length}, {"multiplicity", f.multiplicity}});
    return Json{{"cycle_type", s.cycle_type()},
                {"torus_rank", s.torus_rank()},
                {"shape", stratum_quotient_shape(s)},
                {"residual_action", std::move(residual)}};
}

Multipartition multipartition_from(const Json &j)
{
    if (!j.is_array()) throw ValidationError("a cycle type must be an array of partitions");
    Multipartition mp;
    for (const auto &p : j) mp.push_back(partition_from(p));
    return mp;
}

Json to_json(const PoincarePolynomial &p) { return Json{{"coeffs", p.coeffs()}}; }

Json to_json(const StratumPoint &p)
{
    return Json{{"cycle_type", p.stratum().cycle_type()}, {"coords", scalars_to(p.coords())}};
}

StratumPoint stratum_point_from(const Json &j)
{
    return StratumPoint(Stratum(multipartition_from(field(j, "cycle_type"))), scalars_from(field(j, "coords")));
}

Json to_json(const SymPoint &y)
{
    Json blocks = Json::array();
    for (const auto &b : y.blocks()) blocks.push_back(scalars_to(b));
    return Json{{"blocks", std::move(blocks)}};
}

SymPoint sym_point_from(const Json &j)
{
    if (j.is_array()) return SymPoint({scalars_from(j)});
    const Json &arr = field(j, "blocks");
    if (!arr.is_array()) throw ValidationError("blocks must be an array");
    std::vector<std::vector<QScalar>> blocks;
    for (const auto &b : arr) blocks.push_back(scalars_from(b));
    return SymPoint(std::move(blocks));
}

Json to_json(const Complex &z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from(const Json &j)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    const Json &re = field(j, "re");
    if (!re.is_number()) throw ValidationError("\"re\" must be a number");
    double im = 0.0;
    if (j.contains("im")) {
        if (!j.at("im").is_number()) throw ValidationError("\"im\" must be a number");
        im = j.at("im").get<double>();
    }
    return {re.get<double>(), im};
}

} // namespace smoothdual::json_io
