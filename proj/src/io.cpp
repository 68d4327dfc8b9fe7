#include "alglab/io.hpp"

#include <fstream>
#include <sstream>

namespace alglab {

const char* const kToolVersion = "0.1.0";

namespace {

using nlohmann::json;

template <class S>
json constants_to_json(const Algebra<S>& a) {
  json arr = json::array();
  for (const auto& e : a.entries()) {
    json row = json::array({e.i, e.j, e.k});
    if constexpr (scalar_traits<S>::exact)
      row.push_back(rat_str(e.c));
    else
      row.push_back(e.c);
    arr.push_back(row);
  }
  return arr;
}

template <class S>
json metric_to_json(const Mat<S>& h) {
  json rows = json::array();
  for (int i = 0; i < h.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < h.cols(); ++j) {
      if constexpr (scalar_traits<S>::exact)
        row.push_back(rat_str(h(i, j)));
      else
        row.push_back(h(i, j));
    }
    rows.push_back(row);
  }
  return rows;
}

json common_doc(int dim, const char* mode, const std::vector<std::string>& labels,
                const json& meta) {
  json doc;
  doc["dim"] = dim;
  doc["mode"] = mode;
  if (!labels.empty()) doc["labels"] = labels;
  if (!meta.is_null() && !meta.empty()) doc["meta"] = meta;
  return doc;
}

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw parse_error("algebra file: field '" + field + "': " + why);
}

Rat parse_rat_field(const json& v, const std::string& field) {
  if (v.is_number_integer()) return make_rat(v.get<long>());
  if (v.is_string()) {
    auto q = parse_rat(v.get<std::string>());
    if (!q) fail(field, "not a rational 'p/q': " + v.get<std::string>());
    // reject unreduced or negative-denominator inputs
    std::string norm = rat_str(*q);
    std::string given = v.get<std::string>();
    if (norm != given && given != "+" + norm) fail(field, "rational not in reduced form: " + given);
    return *q;
  }
  fail(field, "expected integer or 'p/q' string");
}

}  // namespace

nlohmann::json algebra_to_json(const Algebra<Rat>& a, const Mat<Rat>* h, const json& meta) {
  json doc = common_doc(a.dim(), "rational", a.labels(), meta);
  doc["constants"] = constants_to_json(a);
  if (h) doc["metric"] = metric_to_json(*h);
  return doc;
}

nlohmann::json algebra_to_json(const Algebra<double>& a, const Mat<double>* h, const json& meta) {
  json doc = common_doc(a.dim(), "float", a.labels(), meta);
  doc["constants"] = constants_to_json(a);
  if (h) doc["metric"] = metric_to_json(*h);
  return doc;
}

LoadedAlgebra parse_algebra_json(const json& j) {
  if (!j.is_object()) throw parse_error("algebra file: top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) fail("dim", "missing or not an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) fail("dim", "must be >= 1");
  std::string mode = j.value("mode", "rational");
  if (mode != "rational" && mode != "float") fail("mode", "must be 'rational' or 'float'");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) fail("labels", "must be an array");
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
    if (!labels.empty() && static_cast<int>(labels.size()) != dim)
      fail("labels", "length must equal dim");
  }
  if (!j.contains("constants") || !j["constants"].is_array())
    fail("constants", "missing or not an array");

  LoadedAlgebra out;
  out.rational_mode = mode == "rational";
  out.meta = j.value("meta", json::object());

  auto check_idx = [&](const json& v, size_t row, int pos) {
    if (!v.is_number_integer()) fail("constants[" + std::to_string(row) + "]", "index not integer");
    int idx = v.get<int>();
    if (idx < 0 || idx >= dim)
      fail("constants[" + std::to_string(row) + "][" + std::to_string(pos) + "]",
           "index " + std::to_string(idx) + " out of range [0," + std::to_string(dim) + ")");
    return idx;
  };

  try {
    if (out.rational_mode) {
      std::vector<Algebra<Rat>::Entry> entries;
      size_t row = 0;
      for (const auto& e : j["constants"]) {
        if (!e.is_array() || e.size() != 4)
          fail("constants[" + std::to_string(row) + "]", "expected [i,j,k,value]");
        entries.push_back({check_idx(e[0], row, 0), check_idx(e[1], row, 1),
                           check_idx(e[2], row, 2),
                           parse_rat_field(e[3], "constants[" + std::to_string(row) + "][3]")});
        ++row;
      }
      out.alg_exact = Algebra<Rat>(dim, std::move(entries), labels);
      if (j.contains("metric")) {
        const auto& m = j["metric"];
        if (!m.is_array() || static_cast<int>(m.size()) != dim) fail("metric", "must be dim rows");
        Mat<Rat> h(dim, dim);
        for (int r = 0; r < dim; ++r) {
          if (!m[r].is_array() || static_cast<int>(m[r].size()) != dim)
            fail("metric[" + std::to_string(r) + "]", "must have dim columns");
          for (int c = 0; c < dim; ++c)
            h(r, c) = parse_rat_field(m[r][c], "metric[" + std::to_string(r) + "]");
        }
        out.metric_exact = std::move(h);
      }
      out.alg_float = to_float(*out.alg_exact);
      if (out.metric_exact) out.metric_float = to_float(*out.metric_exact);
    } else {
      std::vector<Algebra<double>::Entry> entries;
      size_t row = 0;
      for (const auto& e : j["constants"]) {
        if (!e.is_array() || e.size() != 4)
          fail("constants[" + std::to_string(row) + "]", "expected [i,j,k,value]");
        if (!e[3].is_number()) fail("constants[" + std::to_string(row) + "][3]", "not a number");
        entries.push_back({check_idx(e[0], row, 0), check_idx(e[1], row, 1),
                           check_idx(e[2], row, 2), e[3].get<double>()});
        ++row;
      }
      out.alg_float = Algebra<double>(dim, std::move(entries), labels);
      if (j.contains("metric")) {
        const auto& m = j["metric"];
        if (!m.is_array() || static_cast<int>(m.size()) != dim) fail("metric", "must be dim rows");
        Mat<double> h(dim, dim);
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c) h(r, c) = m[r][c].get<double>();
        out.metric_float = std::move(h);
      }
    }
  } catch (const invalid_presentation& e) {
    throw parse_error(std::string("algebra file: ") + e.what());
  }
  return out;
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("malformed JSON in " + path + ": " + e.what());
  }
  return parse_algebra_json(j);
}

void save_algebra_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write file: " + path);
  out << doc.dump(2) << "\n";
}

Source resolve_source(const std::string& spec) {
  Source src;
  src.origin = spec;
  // "preset:..." is always a preset; otherwise a file only when it exists on
  // disk or carries a .json suffix (preset parameters may contain '/')
  bool is_file = false;
  if (spec.rfind("preset:", 0) != 0) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
      is_file = true;
    } else {
      std::ifstream probe(spec);
      is_file = probe.good();
    }
  }
  if (!is_file) {
    src.preset = build_preset(spec);
    return src;
  }
  LoadedAlgebra la = load_algebra_file(spec);
  Preset p;
  p.desc.name = "file";
  p.desc.canonical = spec;
  p.desc.provenance = "loaded from " + spec;
  p.rational_mode = la.rational_mode;
  if (la.rational_mode) {
    if (!la.metric_exact) throw parse_error("file has no metric; operations need one");
    p.exact = make_metrized(*la.alg_exact, *la.metric_exact);
    p.flt = to_float(*p.exact);
    p.metric_invariant = p.exact->invariant();
  } else {
    if (!la.metric_float) throw parse_error("file has no metric; operations need one");
    p.flt = make_metrized(*la.alg_float, *la.metric_float);
    p.metric_invariant = p.flt.invariant();
  }
  src.preset = std::move(p);
  return src;
}

Report make_report(const std::string& command, const json& config, const json& result) {
  Report r;
  r.body["tool"] = "alglab";
  r.body["version"] = kToolVersion;
  r.body["command"] = command;
  r.body["config"] = config;
  r.body["result"] = result;
  return r;
}

std::string Report::to_json() const { return body.dump(2) + "\n"; }

namespace {
void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out << prefix << "," << j.dump() << "\n";
  }
}
}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "key,value\n";
  flatten(body, "", out);
  return out.str();
}

}  // namespace alglab
