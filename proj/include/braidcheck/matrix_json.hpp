#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "braidcheck/scalar_io.hpp"
#include "braidcheck/tensor_op.hpp"

namespace braidcheck {

/*
 * Matrix file format:
 *   {"N": int, "arity": int, "entries": [[string, ...], ...]}
 * with every entry a scalar literal (rational "p/s" or a Laurent sum of
 * "c*q^k" terms). Round-trips are bit-exact: write(read(x)) == x for
 * files produced by this writer.
 */
inline TensorOp tensorop_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("arity") || !j.contains("entries"))
        throw ValidationError("matrix object needs fields N, arity, entries");
    int N = j.at("N").get<int>();
    int arity = j.at("arity").get<int>();
    TensorOp t(N, arity);
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != t.dim())
        throw ValidationError("entries must be a " + std::to_string(t.dim()) + "-row array");
    for (int r = 0; r < t.dim(); ++r) {
        const auto& row = rows.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != t.dim())
            throw ValidationError("row " + std::to_string(r) + " must have " + std::to_string(t.dim()) +
                                  " entries");
        for (int c = 0; c < t.dim(); ++c) {
            Scalar s = parse_scalar(row.at(static_cast<std::size_t>(c)).get<std::string>());
            if (!s.is_zero()) t.at(r, c) = s;
        }
    }
    return t;
}

inline nlohmann::ordered_json tensorop_to_json(const TensorOp& t) {
    nlohmann::ordered_json j;
    j["N"] = t.N();
    j["arity"] = t.arity();
    auto rows = nlohmann::ordered_json::array();
    for (int r = 0; r < t.dim(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < t.dim(); ++c) row.push_back(write_scalar(t.at(r, c)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

inline TensorOp load_tensorop(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open matrix file '" + path + "'");
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("bad JSON in '" + path + "': " + e.what());
    }
    return tensorop_from_json(j);
}

inline void save_tensorop(const TensorOp& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write matrix file '" + path + "'");
    out << tensorop_to_json(t).dump(1) << "\n";
}

} // namespace braidcheck
