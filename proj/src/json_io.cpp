#include "bandlab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace bandlab {

namespace {

void dump_value(const json& j, std::string& out, int indent);

void dump_double(double v, std::string& out) {
  if (!std::isfinite(v)) throw std::invalid_argument("canonical JSON rejects non-finite numbers");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
  // Ensure the token re-parses as a floating point number.
  if (out.find_first_of(".eE", out.size() - std::strlen(buf)) == std::string::npos) out += ".0";
}

void dump_indent(std::string& out, int indent) { out.append(static_cast<std::size_t>(indent), ' '); }

void dump_value(const json& j, std::string& out, int indent) {
  switch (j.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case json::value_t::number_float:
      dump_double(j.get<double>(), out);
      break;
    case json::value_t::string:
      out += json(j.get<std::string>()).dump();  // reuse the library's escaping
      break;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        dump_indent(out, indent + 2);
        dump_value(j[i], out, indent + 2);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      dump_indent(out, indent);
      out += ']';
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : j.items()) {  // nlohmann objects iterate key-sorted
        dump_indent(out, indent + 2);
        out += json(key).dump();
        out += ": ";
        dump_value(value, out, indent + 2);
        if (++i < j.size()) out += ',';
        out += '\n';
      }
      dump_indent(out, indent);
      out += '}';
      break;
    }
    default:
      throw std::invalid_argument("unsupported JSON value type");
  }
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  dump_value(j, out, 0);
  out += '\n';
  return out;
}

std::string canonical_hash(const json& j) {
  const std::string text = canonical_dump(j);
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

json band_set_to_json(const BandSet& set) {
  json arr = json::array();
  for (const Band& band : set.bands()) arr.push_back(json::array({band.lo, band.hi}));
  return arr;
}

BandSet band_set_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("band set JSON must be an array of [a, b] pairs");
  std::vector<Band> bands;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw ConfigError("band set entries must be [a, b] pairs");
    bands.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  return BandSet(std::move(bands));
}

json distortion_report_to_json(const DistortionReport& report) {
  json j;
  j["min_margin"] = report.min_margin;
  j["worst_z"] = json::array({report.worst_z.real(), report.worst_z.imag()});
  j["worst_bound"] = bound_kind_name(report.worst_kind);
  j["counts"] = {{"distor1", report.counts[0]},
                 {"distor2", report.counts[1]},
                 {"distor3", report.counts[2]}};
  j["discarded"] = report.discarded;
  j["seed"] = report.seed;
  j["N"] = report.samples;
  j["tol"] = report.tol;
  j["pass"] = report.pass();
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot open output file " + path);
  out << contents;
}

}  // namespace bandlab
