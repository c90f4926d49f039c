#include "okdens/io.hpp"

#include "okdens/error.hpp"

namespace okdens {

namespace {

Json coeffs_to_json(const std::vector<BigInt>& v)
{
    Json arr = Json::array();
    for (const auto& c : v) {
        if (c.fits_slong_p()) arr.push_back(c.get_si());
        else arr.push_back(c.get_str());
    }
    return arr;
}

Json poly_to_json(const PolyModP& g)
{
    Json arr = Json::array();
    for (auto c : g.coeffs()) arr.push_back(c);
    return arr;
}

std::size_t size_field(const Json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
        throw Error(ErrorCode::InvalidInput, std::string("matrix JSON needs a non-negative integer '") + key + "'");
    return j[key].get<std::size_t>();
}

}  // namespace

BigInt big_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return big_from_u64(j.get<std::uint64_t>());
        return big_from_i64(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        BigInt v;
        std::string s = j.get<std::string>();
        if (!s.empty() && v.set_str(s, 10) == 0) return v;
    }
    throw Error(ErrorCode::InvalidInput, "expected an integer, got " + j.dump());
}

MatrixOK matrix_from_json(const Json& j, const FieldOptions& options)
{
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "matrix JSON must be an object");
    if (!j.contains("field") || !j["field"].is_array())
        throw Error(ErrorCode::InvalidInput, "matrix JSON needs a 'field' coefficient array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["field"]) coeffs.push_back(big_from_json(c));
    MatrixOK mat;
    mat.field = std::make_shared<const NumberField>(parse_field(coeffs, options));
    mat.n = size_field(j, "n");
    mat.m = size_field(j, "m");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw Error(ErrorCode::InvalidInput, "matrix JSON needs an 'entries' array");
    const auto& rows = j["entries"];
    if (rows.size() != mat.n) throw Error(ErrorCode::BadShape, "'entries' has " + std::to_string(rows.size()) + " rows, n is " + std::to_string(mat.n));
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != mat.m)
            throw Error(ErrorCode::BadShape, "every row of 'entries' must hold m entries");
        for (const auto& entry : row) {
            if (!entry.is_array()) throw Error(ErrorCode::InvalidInput, "each entry must be a coordinate array");
            std::vector<BigInt> coords;
            for (const auto& c : entry) coords.push_back(big_from_json(c));
            mat.entries.emplace_back(std::move(coords));
        }
    }
    mat.validate();
    return mat;
}

Json matrix_to_json(const MatrixOK& mat)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < mat.n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < mat.m; ++j) row.push_back(coeffs_to_json(mat.at(i, j).coords()));
        rows.push_back(std::move(row));
    }
    return {{"field", coeffs_to_json(mat.field->coeffs())}, {"n", mat.n}, {"m", mat.m}, {"entries", rows}};
}

Json field_to_json(const NumberField& field)
{
    Json checked = Json::array(), nonmax = Json::array();
    for (const auto& p : field.checked_primes()) checked.push_back(p.get_str());
    for (const auto& p : field.nonmaximal_primes()) nonmax.push_back(p.get_str());
    return {
        {"coeffs", coeffs_to_json(field.coeffs())},
        {"polynomial", field.polynomial_string()},
        {"degree", field.degree()},
        {"disc_f", field.discriminant().get_str()},
        {"maximality", std::string(to_string(field.maximality()))},
        {"dedekind_checked_primes", checked},
        {"nonmaximal_primes", nonmax},
        {"irreducible_mod", field.irreducibility_witness()},
        {"warnings", field.warnings()},
    };
}

Json split_to_json(const PrimeSplit& split)
{
    Json factors = Json::array();
    for (const auto& f : split.factors)
        factors.push_back({{"g", poly_to_json(f.g)}, {"e", f.e}, {"f_deg", f.f_deg}});
    return {{"p", split.p}, {"factors", factors}};
}

Json report_to_json(const UnimodReport& r)
{
    Json j = {
        {"method", std::string(to_string(r.method))},
        {"verdict", r.verdict},
        {"index", r.index ? Json(r.index->to_string()) : Json(nullptr)},
        {"witness", nullptr},
        {"warnings", r.warnings},
    };
    if (r.witness) j["witness"] = {{"p", r.witness->p}, {"g", poly_to_json(r.witness->g)}};
    return j;
}

Json density_to_json(const EulerProductResult& r)
{
    return {
        {"n", r.n},
        {"m", r.m},
        {"value", r.to_double()},
        {"value_str", r.value_string(30)},
        {"prime_bound", r.prime_bound},
        {"tail_bound", r.tail_bound},
    };
}

Json experiment_to_json(const ExperimentReport& r)
{
    return {
        {"field", coeffs_to_json(r.field->coeffs())},
        {"polynomial", r.field->polynomial_string()},
        {"n", r.n},
        {"m", r.m},
        {"B", r.bound},
        {"N", r.samples},
        {"seed", r.seed},
        {"hits", r.hits},
        {"empirical", r.empirical},
        {"predicted", density_to_json(r.predicted)},
        {"ci_half_width", r.ci_half_width},
        {"wall_time", r.wall_time},
        {"workers", r.workers},
        {"warnings", r.warnings},
    };
}

Json exact_density_to_json(const ExactDensity& d)
{
    return {{"density", d.fraction()}, {"hits", d.hits.get_str()}, {"total", d.total.get_str()}, {"decimal", d.value()}};
}

}  // namespace okdens
