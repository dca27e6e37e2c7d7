#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dzeros/blaschke.hpp"
#include "dzeros/circle_sets.hpp"
#include "dzeros/partial_sums.hpp"
#include "dzeros/zerosets.hpp"

namespace dzeros::io {

// Insertion-ordered documents keep report output stable byte for byte.
using ojson = nlohmann::ordered_json;

// Finite values stay numbers; infinities and nans become the strings
// "inf", "-inf", "nan" (JSON has no literal for them).
ojson num(double x);

// Serializer with 17-significant-digit floats, two-space indent and a
// trailing newline. Arrays of numbers stay on one line.
std::string dump(const ojson& j);

ojson to_json(const PartialSumSeries& s);
ojson to_json(const Arc& a);
ojson to_json(const CircleSet& set);
ojson to_json(const CantorSpec& spec);
ojson to_json(const std::vector<Zero>& zeros);

// Accepts {"full_circle": true}, {"points": [...]}, {"arcs": [{"start","end"}...]}
// or {"cantor": {"spec": ..., "level": k}}.
CircleSet set_from_json(const ojson& j);

// Accepts {"kind":"ratio","ratio":r,"depth":d}, {"kind":"stretched","s":s,"depth":d}
// or {"kind":"lengths","lengths":[...]} with lengths[0] = 2*pi.
CantorSpec cantor_spec_from_json(const ojson& j);

// Array of {"theta", "one_minus_r"} or {"theta", "abs_log_one_minus_r"};
// also unwraps an object carrying the array under "zeros".
std::vector<Zero> zeros_from_json(const ojson& j);

// {"kind":"power","p":..}, {"kind":"exp-inverse","gamma":..},
// {"kind":"log-square"} or {"kind":"exp-loglog-square"}.
ModulusOmega gauge_from_json(const ojson& j);

ojson read_json_file(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace dzeros::io
