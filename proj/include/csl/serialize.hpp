#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "csl/coincidence.hpp"
#include "csl/reflection.hpp"
#include "csl/text.hpp"

// JSON documents for matrices, certificates and reflection sequences.
// Key order is fixed and all scalars ride as grammar strings, so printed
// documents are byte-stable and arbitrary precision survives round trips.

namespace csl {

using json = nlohmann::ordered_json;

// Matrix document: optional "d" (radicand; absent for rational-only) and
// "rows", an array of arrays of SCALAR strings.
inline json matrix_to_json(const ExactMatrix& m) {
    json doc;
    if (m.context().is_quadratic()) doc["d"] = m.context().radicand();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_text(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

inline ExactMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("rows"))
        throw parse_error("matrix document needs a 'rows' field", 0);
    FieldContext ctx;
    if (doc.contains("d")) {
        long long d = 0;
        const json& dv = doc["d"];
        if (dv.is_number_integer())
            d = dv.get<long long>();
        else if (dv.is_string())
            d = std::stoll(dv.get<std::string>());
        else
            throw parse_error("'d' must be an integer", 0);
        if (d != 0) ctx = FieldContext::quadratic(d);
    }
    const json& rows = doc["rows"];
    if (!rows.is_array() || rows.empty()) throw parse_error("'rows' must be a nonempty array", 0);
    std::size_t n_cols = 0;
    std::vector<FieldElement> entries;
    for (const json& row : rows) {
        if (!row.is_array() || row.empty())
            throw parse_error("each row must be a nonempty array", 0);
        if (n_cols == 0) n_cols = row.size();
        if (row.size() != n_cols) throw parse_error("rows have differing lengths", 0);
        for (const json& cell : row) {
            if (!cell.is_string()) throw parse_error("matrix entries must be SCALAR strings", 0);
            FieldElement x = parse_scalar(cell.get<std::string>());
            entries.push_back(x.coerced(unify(x.context(), ctx)));
        }
    }
    return ExactMatrix(rows.size(), n_cols, std::move(entries));
}

inline json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_text(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json certificate_to_json(const CoincidenceCertificate& cert) {
    json doc;
    json rows = json::array();
    for (std::size_t i = 0; i < cert.m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < cert.m.cols(); ++j) row.push_back(to_text(cert.m.at(i, j)));
        rows.push_back(std::move(row));
    }
    doc["M"] = std::move(rows);
    doc["sigma"] = to_text(cert.sigma);
    doc["intersection_basis"] = int_matrix_to_json(cert.intersection.c);
    doc["is_isometry"] = cert.is_isometry;
    return doc;
}

inline json sequence_to_json(const ReflectionSequence& seq) {
    json doc;
    json vectors = json::array();
    for (const PrimitiveLatticeVector& v : seq.vectors) {
        json coords = json::array();
        for (const Int& c : v.coords) coords.push_back(to_text(c));
        vectors.push_back(std::move(coords));
    }
    doc["vectors"] = std::move(vectors);
    doc["target"] = matrix_to_json(seq.target);
    return doc;
}

inline ExactMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what(),
                          static_cast<std::size_t>(e.byte));
    }
    return matrix_from_json(doc);
}

inline void write_matrix_file(const std::string& path, const ExactMatrix& m) {
    std::ofstream out(path);
    if (!out) throw error("cannot open file for writing: " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

} // namespace csl
