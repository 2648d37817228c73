#pragma once

// JSON forms of reports, certificates and weight matrices. Complex entries are
// [re, im] pairs; floats are rounded to 12 significant digits so identical
// computations serialize byte-identically.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectral_indep/bounds.hpp"
#include "spectral_indep/errors.hpp"
#include "spectral_indep/exact_oracle.hpp"
#include "spectral_indep/packing_cert.hpp"
#include "spectral_indep/weight_search.hpp"

namespace spectral_indep {

using json = nlohmann::json;

inline double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;  // no "-0.0"
}

inline std::string rational_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline json to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({round12(m(i, j).real()), round12(m(i, j).imag())});
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Dense matrix from rows of entries; an entry is a number or an [re, im] pair.
inline ComplexMatrix complex_matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw CertificateError(where + ": matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw CertificateError(where + ": matrix rows must be arrays");
    const std::size_t cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw CertificateError(where + ": ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = j[r][c];
            if (e.is_number()) {
                m(r, c) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(r, c) = {e[0].get<double>(), e[1].get<double>()};
            } else {
                throw CertificateError(where + ": entry must be a number or an [re, im] pair");
            }
        }
    }
    return m;
}

inline json to_json(const BoundReport& r) {
    json j;
    j["graph"] = r.graph;
    j["k"] = r.k;
    j["bound"] = r.bound;
    j["value"] = round12(r.value);
    j["floor"] = r.floor;
    j["counts"] = r.counts ? json{{"ge_w", r.counts->ge_w}, {"le_W", r.counts->le_W}} : json(nullptr);
    if (r.counts) j["binding"] = r.counts->binding();
    j["tight"] = r.tight ? json(*r.tight) : json(nullptr);
    if (r.inertia) j["inertia"] = {r.inertia->n_plus, r.inertia->n_zero, r.inertia->n_minus};
    if (r.extrema) j["extrema"] = {{"w", round12(r.extrema->w)}, {"W", round12(r.extrema->W)}};
    if (r.polynomial) {
        json c = json::array();
        for (double x : r.polynomial->coefficients()) c.push_back(round12(x));
        j["polynomial"] = c;
    }
    return j;
}

inline json to_json(const IndependentSetCert& c) { return {{"k", c.k}, {"vertices", c.vertices}}; }

inline IndependentSetCert independent_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw CertificateError("independent-set certificate needs a \"vertices\" array");
    IndependentSetCert c;
    c.k = j.value("k", std::size_t{1});
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw CertificateError("independent-set certificate: vertices must be nonnegative integers");
        c.vertices.push_back(v.get<std::size_t>());
    }
    return c;
}

inline json to_json(const ChainReport& c) {
    json bounds = json::array();
    for (const auto& b : c.bounds) bounds.push_back(to_json(b));
    json j;
    j["graph"] = c.graph;
    j["n"] = c.n;
    j["k"] = c.k;
    j["bounds"] = bounds;
    if (c.exact)
        j["exact"] = {{"alpha_k", c.exact->size}, {"certificate", to_json(c.exact->cert)}};
    else
        j["exact"] = nullptr;
    if (c.budget_error) j["budget_error"] = *c.budget_error;
    return j;
}

inline json to_json(const PackingCertificate& p, std::size_t k) {
    json projectors = json::object();
    for (std::size_t u = 0; u < p.projectors.size(); ++u) projectors[std::to_string(u)] = to_json(p.projectors[u]);
    return {{"d", p.d}, {"k", k}, {"projectors", projectors}};
}

inline json to_json(const QuantumCertificate& q, std::size_t k) {
    json projectors = json::object();
    for (std::size_t u = 0; u < q.projectors.size(); ++u) {
        json per = json::array();
        for (const auto& m : q.projectors[u]) per.push_back(to_json(m));
        projectors[std::to_string(u)] = per;
    }
    return {{"d", q.d}, {"k", k}, {"t", q.t}, {"projectors", projectors}};
}

/// True for the quantum form (carries "t" and one array of t matrices per vertex).
inline bool is_quantum_certificate(const json& j) { return j.is_object() && j.contains("t"); }

namespace detail {

inline std::size_t vertex_key(const std::string& key, std::size_t n) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != key.size()) throw CertificateError("certificate: projector key '" + key + "' is not a vertex index");
    if (v >= n) throw CertificateError("certificate: vertex " + key + " out of range");
    return static_cast<std::size_t>(v);
}

inline std::size_t positive_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer() || j[name].get<long long>() < 1)
        throw CertificateError(std::string("certificate: \"") + name + "\" must be a positive integer");
    return j[name].get<std::size_t>();
}

}  // namespace detail

/// Reads a packing certificate for an n-vertex graph. Vertices absent from
/// "projectors" get the zero projector.
inline PackingCertificate packing_from_json(const json& j, std::size_t n) {
    if (!j.is_object() || !j.contains("projectors") || !j["projectors"].is_object())
        throw CertificateError("packing certificate needs a \"projectors\" object");
    PackingCertificate p;
    p.d = detail::positive_field(j, "d");
    p.projectors.assign(n, ComplexMatrix::Zero(p.d, p.d));
    for (const auto& [key, value] : j["projectors"].items())
        p.projectors[detail::vertex_key(key, n)] = complex_matrix_from_json(value, "projector " + key);
    return p;
}

inline QuantumCertificate quantum_from_json(const json& j, std::size_t n) {
    if (!j.is_object() || !j.contains("projectors") || !j["projectors"].is_object())
        throw CertificateError("quantum certificate needs a \"projectors\" object");
    QuantumCertificate q;
    q.d = detail::positive_field(j, "d");
    q.t = detail::positive_field(j, "t");
    q.projectors.assign(n, std::vector<ComplexMatrix>(q.t, ComplexMatrix::Zero(q.d, q.d)));
    for (const auto& [key, value] : j["projectors"].items()) {
        const std::size_t u = detail::vertex_key(key, n);
        if (!value.is_array() || value.size() != q.t)
            throw CertificateError("quantum certificate: vertex " + key + " must list exactly t matrices");
        for (std::size_t i = 0; i < q.t; ++i)
            q.projectors[u][i] = complex_matrix_from_json(value[i], "projector " + key + "/" + std::to_string(i));
    }
    return q;
}

/// Certificate "k" field, defaulting to 1.
inline std::size_t certificate_k(const json& j) {
    if (!j.contains("k")) return 1;
    if (!j["k"].is_number_integer() || j["k"].get<long long>() < 1)
        throw CertificateError("certificate: \"k\" must be a positive integer");
    return j["k"].get<std::size_t>();
}

inline json to_json(const VerificationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"condition", v.condition}, {"indices", v.indices}, {"residual", round12(v.residual)}});
    json j{{"valid", r.valid}, {"violations", violations}};
    if (r.value) {
        j["value"] = rational_string(*r.value);
        j["value_float"] = round12(static_cast<double>(*r.value));
    } else {
        j["value"] = nullptr;
    }
    return j;
}

inline json to_json(const WeightMatrix& w) { return {{"field", to_string(w.field)}, {"matrix", to_json(w.matrix)}}; }

inline json to_json(const SearchResult& r) {
    return {{"best_bound", r.best_bound},
            {"target_alpha", r.target},
            {"tight", r.tight},
            {"tight_restart", r.tight_restart ? json(*r.tight_restart) : json(nullptr)},
            {"iterations", r.iterations},
            {"restarts_run", r.restarts_run},
            {"visited", r.visited},
            {"min_visited_bound", r.min_visited_bound},
            {"seed", r.seed},
            {"weights", to_json(r.best_weights)}};
}

inline json to_json(const SearchConfig& c) {
    return {{"restarts", c.restarts},         {"iterations", c.iterations},
            {"initial_step", round12(c.initial_step)}, {"step_decay", round12(c.step_decay)},
            {"min_step", round12(c.min_step)}, {"field", to_string(c.field)},
            {"seed", c.seed},                 {"grid_denominator", c.grid_denominator},
            {"epsilon", round12(c.epsilon)}};
}

/// Overlays JSON keys onto a config; unknown keys are rejected.
inline SearchConfig search_config_from_json(const json& j, SearchConfig c = {}) {
    if (!j.is_object()) throw ParseError("search config must be a JSON object", 0);
    for (const auto& [key, v] : j.items()) {
        if (key == "restarts") c.restarts = v.get<std::size_t>();
        else if (key == "iterations") c.iterations = v.get<std::size_t>();
        else if (key == "initial_step") c.initial_step = v.get<double>();
        else if (key == "step_decay") c.step_decay = v.get<double>();
        else if (key == "min_step") c.min_step = v.get<double>();
        else if (key == "seed") c.seed = v.get<std::uint64_t>();
        else if (key == "grid_denominator") c.grid_denominator = v.get<long long>();
        else if (key == "epsilon") c.epsilon = v.get<double>();
        else if (key == "field") {
            const auto f = v.get<std::string>();
            if (f == "real") c.field = Field::real_symmetric;
            else if (f == "hermitian") c.field = Field::hermitian;
            else throw ParseError("search config: field must be \"real\" or \"hermitian\"", 0);
        } else {
            throw ParseError("search config: unknown key \"" + key + "\"", 0);
        }
    }
    return c;
}

}  // namespace spectral_indep
