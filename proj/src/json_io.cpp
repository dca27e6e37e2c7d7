#include "dzeros/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dzeros/util.hpp"

namespace dzeros::io {

namespace {

void escape_into(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

bool flat_array(const ojson& j) {
  for (const auto& v : j)
    if (v.is_structured()) return false;
  return true;
}

void dump_into(std::string& out, const ojson& j, int indent) {
  const std::string pad(2 * std::size_t(indent), ' ');
  const std::string pad_in(2 * std::size_t(indent + 1), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::null: out += "null"; break;
    case nlohmann::json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case nlohmann::json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case nlohmann::json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case nlohmann::json::value_t::number_float: {
      double x = j.get<double>();
      if (std::isfinite(x)) {
        out += fmt17(x);
      } else {
        escape_into(out, fmt17(x));
      }
      break;
    }
    case nlohmann::json::value_t::string: escape_into(out, j.get<std::string>()); break;
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      bool flat = flat_array(j);
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        if (flat) {
          if (!(&v == &j.front())) out += ' ';
        } else {
          out += '\n';
          out += pad_in;
        }
        dump_into(out, v, indent + 1);
      }
      if (!flat) {
        out += '\n';
        out += pad;
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += '\n';
        out += pad_in;
        escape_into(out, it.key());
        out += ": ";
        dump_into(out, it.value(), indent + 1);
      }
      out += '\n';
      out += pad;
      out += '}';
      break;
    }
    default: throw std::logic_error("dump: unhandled json type");
  }
}

double require_number(const ojson& j, const char* what) {
  if (!j.is_number()) throw std::invalid_argument(std::string(what) + ": expected a number");
  return j.get<double>();
}

}  // namespace

ojson num(double x) {
  if (std::isfinite(x)) return x;
  return fmt17(x);
}

std::string dump(const ojson& j) {
  std::string out;
  dump_into(out, j, 0);
  out += '\n';
  return out;
}

ojson to_json(const PartialSumSeries& s) {
  ojson j;
  j["cutoffs"] = s.cutoffs;
  ojson sums = ojson::array();
  for (double v : s.sums) sums.push_back(num(v));
  j["sums"] = std::move(sums);
  j["total"] = num(s.total());
  j["verdict"] = to_string(s.verdict);
  j["last_increment"] = num(s.last_increment);
  j["growth_slope"] = num(s.growth_slope);
  j["certificate"] = s.certificate;
  return j;
}

ojson to_json(const Arc& a) {
  return ojson{{"start", num(a.theta_start)}, {"end", num(a.theta_end)}};
}

ojson to_json(const CircleSet& set) {
  ojson arcs = ojson::array();
  for (const Arc& a : set.arcs()) arcs.push_back(to_json(a));
  ojson j;
  j["full_circle"] = set.is_full_circle();
  j["measure"] = num(set.measure());
  j["arcs"] = std::move(arcs);
  return j;
}

ojson to_json(const CantorSpec& spec) {
  ojson j;
  j["depth"] = spec.depth;
  ojson ell = ojson::array();
  for (double v : spec.ell) ell.push_back(num(v));
  j["ell"] = std::move(ell);
  ojson lil = ojson::array();
  for (double v : spec.log_inv_ell) lil.push_back(num(v));
  j["log_inv_ell"] = std::move(lil);
  return j;
}

ojson to_json(const std::vector<Zero>& zeros) {
  ojson arr = ojson::array();
  for (const Zero& z : zeros) {
    ojson j;
    j["theta"] = num(z.theta);
    j["one_minus_r"] = num(z.one_minus_r);
    j["abs_log_one_minus_r"] = num(z.abs_log_one_minus_r);
    arr.push_back(std::move(j));
  }
  return arr;
}

CircleSet set_from_json(const ojson& j) {
  if (!j.is_object()) throw std::invalid_argument("set: expected an object");
  if (j.value("full_circle", false)) return CircleSet::full_circle();
  if (j.contains("cantor")) {
    const ojson& c = j.at("cantor");
    CantorSpec spec = cantor_spec_from_json(c.at("spec"));
    int level = c.at("level").get<int>();
    return cantor_level(spec, level);
  }
  if (j.contains("arcs")) {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs"))
      arcs.emplace_back(require_number(a.at("start"), "arc start"),
                        require_number(a.at("end"), "arc end"));
    return CircleSet::from_arcs(std::move(arcs));
  }
  if (j.contains("points")) {
    std::vector<double> thetas;
    for (const auto& t : j.at("points")) thetas.push_back(require_number(t, "point"));
    return CircleSet::points(thetas);
  }
  throw std::invalid_argument("set: expected arcs, points, cantor, or full_circle");
}

CantorSpec cantor_spec_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("spec: expected an object with a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "ratio")
    return CantorSpec::perfect_symmetric(require_number(j.at("ratio"), "ratio"),
                                         j.at("depth").get<int>());
  if (kind == "stretched")
    return CantorSpec::stretched_exponential(require_number(j.at("s"), "s"),
                                             j.at("depth").get<int>());
  if (kind == "lengths") {
    std::vector<double> lengths;
    for (const auto& v : j.at("lengths")) lengths.push_back(require_number(v, "length"));
    return CantorSpec::from_lengths(std::move(lengths));
  }
  throw std::invalid_argument("spec kind must be ratio, stretched, or lengths");
}

std::vector<Zero> zeros_from_json(const ojson& j) {
  const ojson* arr = &j;
  if (j.is_object()) {
    if (!j.contains("zeros")) throw std::invalid_argument("zeros: missing array");
    arr = &j.at("zeros");
  }
  if (!arr->is_array()) throw std::invalid_argument("zeros: expected an array");
  std::vector<Zero> zeros;
  zeros.reserve(arr->size());
  for (const auto& e : *arr) {
    double theta = require_number(e.at("theta"), "zero theta");
    if (e.contains("one_minus_r"))
      zeros.push_back(make_zero(theta, require_number(e.at("one_minus_r"), "one_minus_r")));
    else if (e.contains("abs_log_one_minus_r"))
      zeros.push_back(
          make_zero_log(theta, require_number(e.at("abs_log_one_minus_r"), "abs_log")));
    else
      throw std::invalid_argument("zero: needs one_minus_r or abs_log_one_minus_r");
  }
  return zeros;
}

ModulusOmega gauge_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("gauge: expected an object with a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "power") return ModulusOmega::power(require_number(j.at("p"), "p"));
  if (kind == "exp-inverse")
    return ModulusOmega::exp_inv(require_number(j.at("gamma"), "gamma"));
  if (kind == "log-square") return ModulusOmega::log_square();
  if (kind == "exp-loglog-square") return ModulusOmega::exp_loglog_square();
  throw std::invalid_argument(
      "gauge kind must be power, exp-inverse, log-square, or exp-loglog-square");
}

ojson read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  return ojson::parse(in);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw std::logic_error("csv row width mismatch");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += fmt17(row[i]);
    }
    out += '\n';
  }
  write_text(path, out);
}

}  // namespace dzeros::io
