#include "monodromy/json_io.hpp"

#include <stdexcept>

namespace monodromy {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const Cyclotomic& x) {
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

Json to_json(const std::vector<Cyclotomic>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const HodgeVector& hv) {
    Json values = Json::array();
    for (long long v : hv.values) values.push_back(v);
    return Json{{"weight", hv.weight}, {"values", values}, {"primitive", hv.primitive}};
}

Json to_json(const LieType& t) {
    return Json{{"name", t.name()},
                {"rank", t.rank},
                {"p", t.p},
                {"q", t.q},
                {"real_rank", t.real_rank},
                {"simple", t.simple}};
}

Json to_json(const ClassificationRecord& rec) {
    Json j{{"d", rec.d},
           {"n", rec.n},
           {"betti", rec.betti},
           {"hodge", to_json(rec.hodge)},
           {"g_type", to_json(rec.g_type)},
           {"torelli_witness_found", rec.torelli_witness_found},
           {"rank_ok", rec.rank_ok},
           {"nonisomorphic", rec.nonisomorphic},
           {"exceptional_path", rec.exceptional_path},
           {"verdict", verdict_cell(rec)},
           {"reasons", rec.reasons}};
    if (rec.k) j["k"] = *rec.k;
    if (rec.i) j["i"] = *rec.i;
    if (rec.gprime_type) j["gprime_type"] = to_json(*rec.gprime_type);
    if (rec.witness) {
        j["witness"] = Json{{"A", monomial_to_string(rec.witness->first)},
                            {"Q", monomial_to_string(rec.witness->second)},
                            {"A_exponents", rec.witness->first},
                            {"Q_exponents", rec.witness->second}};
    }
    if (rec.phi_order) j["phi_order"] = *rec.phi_order;
    if (rec.kernel_order) j["kernel_order"] = *rec.kernel_order;
    return j;
}

Json to_json(const VanishingLattice& lat) {
    Json j{{"dim", lat.dim},
           {"gram", to_json(lat.gram)},
           {"parity", lat.parity == FormParity::Symmetric ? "symmetric" : "skew"},
           {"labels", lat.basis_labels}};
    if (lat.suspended_diagonal) {
        Json diag = Json::array();
        for (const auto& x : *lat.suspended_diagonal) diag.push_back(to_string(x));
        j["suspended_diagonal"] = diag;
    }
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw std::invalid_argument("expected a rational as integer or \"num/den\" string");
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("expected {order, coeffs} for a cyclotomic value");
    const int order = j.at("order").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Cyclotomic::from_coeffs(order, std::move(coeffs));
}

std::vector<Cyclotomic> vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of scalars");
    std::vector<Cyclotomic> v;
    for (const auto& x : j) v.push_back(cyclotomic_from_json(x));
    return v;
}

Matrix matrix_from_json(const Json& j) {
    const Json& rows = j.is_object() ? j.at("entries") : j;
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("expected a non-empty array of rows");
    std::vector<std::vector<Cyclotomic>> data;
    for (const auto& row : rows) data.push_back(vector_from_json(row));
    return Matrix::from_rows(data);
}

VanishingLattice lattice_from_json(const Json& j) {
    VanishingLattice lat;
    lat.gram = matrix_from_json(j.at("gram"));
    lat.dim = lat.gram.rows();
    const std::string parity = j.value("parity", "symmetric");
    if (parity != "symmetric" && parity != "skew")
        throw std::invalid_argument("parity must be \"symmetric\" or \"skew\"");
    lat.parity = parity == "symmetric" ? FormParity::Symmetric : FormParity::Skew;
    if (j.contains("labels")) lat.basis_labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("suspended_diagonal")) {
        std::vector<Rational> diag;
        for (const auto& x : j.at("suspended_diagonal")) diag.push_back(rational_from_json(x));
        lat.suspended_diagonal = std::move(diag);
    }
    return lat;
}

Json envelope(const std::string& command, Json params, Json result,
              std::vector<std::string> provenance) {
    return Json{{"schema_version", "1.0"},
                {"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"provenance", provenance}};
}

} // namespace monodromy
