#include "gridscan/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gridscan/error.hpp"

namespace gridscan {

namespace {

// The emitter is hand-rolled so the byte layout is under our control: keys
// in schema order, two-space indent, doubles at 17 significant digits. The
// parser below reads the same schema with an ordinary JSON library.

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_double_array(std::ostream& out, const std::vector<double>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << fmt(values[i]);
  }
  out << ']';
}

void write_uint_array(std::ostream& out,
                      const std::vector<std::uint32_t>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values[i];
  }
  out << ']';
}

const char* to_string(ResolutionCapPolicy policy) {
  return policy == ResolutionCapPolicy::full ? "full" : "half";
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << report.schema_version << ",\n";

  const ScanConfig& cfg = report.config;
  out << "  \"config\": {\n";
  out << "    \"volume_limit\": " << fmt(cfg.volume_limit) << ",\n";
  out << "    \"coverage_fraction\": " << fmt(cfg.coverage_fraction) << ",\n";
  if (cfg.density.kind == DensityThreshold::Kind::fraction) {
    out << "    \"density\": {\"kind\": \"fraction\", \"value\": "
        << fmt(cfg.density.fraction) << "},\n";
  } else {
    out << "    \"density\": {\"kind\": \"absolute\", \"value\": "
        << cfg.density.absolute << "},\n";
  }
  out << "    \"cap_policy\": \"" << to_string(cfg.cap_policy) << "\",\n";
  out << "    \"start_resolution\": " << cfg.start_resolution << ",\n";
  out << "    \"manifold_dim\": " << report.manifold_dim << "\n";
  out << "  },\n";

  out << "  \"dataset\": {\"points\": " << report.dataset_points
      << ", \"dim\": " << report.dataset_dim << "},\n";

  out << "  \"outcome\": {\"status\": \""
      << (report.outcome.found() ? "found" : "not-found") << "\", \"reason\": ";
  if (report.outcome.reason.has_value()) {
    out << '"' << to_string(*report.outcome.reason) << '"';
  } else {
    out << "null";
  }
  out << "},\n";

  out << "  \"trace\": [";
  for (std::size_t i = 0; i < report.outcome.trace.size(); ++i) {
    const TraceEntry& entry = report.outcome.trace[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"resolution\": " << entry.resolution
        << ", \"occupied_cells\": " << entry.occupied_cells
        << ", \"kept_cells\": " << entry.kept_cells
        << ", \"total_volume\": " << fmt(entry.total_volume)
        << ", \"covered\": " << entry.covered << "}";
  }
  out << (report.outcome.trace.empty() ? "],\n" : "\n  ],\n");

  out << "  \"kept\": ";
  if (report.outcome.kept.has_value()) {
    const KeptCells& kept = *report.outcome.kept;
    out << "{\n";
    out << "    \"resolution\": " << kept.resolution.cells_per_axis << ",\n";
    out << "    \"filter_threshold\": " << kept.filter_threshold << ",\n";
    out << "    \"cells\": [";
    for (std::size_t i = 0; i < kept.cells.size(); ++i) {
      const KeptCell& cell = kept.cells[i];
      out << (i == 0 ? "\n" : ",\n");
      out << "      {\"index\": ";
      write_uint_array(out, cell.index);
      out << ", \"center\": ";
      write_double_array(out, cell.center);
      out << ", \"count\": " << cell.count << "}";
    }
    out << (kept.cells.empty() ? "]\n" : "\n    ]\n");
    out << "  },\n";
  } else {
    out << "null,\n";
  }

  out << "  \"chain\": ";
  if (report.chain.has_value()) {
    out << "{\n    \"vertices\": [";
    for (std::size_t i = 0; i < report.chain->vertices.size(); ++i) {
      out << (i == 0 ? "\n" : ",\n") << "      ";
      write_double_array(out, report.chain->vertices[i]);
    }
    out << (report.chain->vertices.empty() ? "],\n" : "\n    ],\n");
    out << "    \"sources\": [";
    for (std::size_t i = 0; i < report.chain->sources.size(); ++i) {
      out << (i == 0 ? "\n" : ",\n") << "      ";
      write_uint_array(out, report.chain->sources[i]);
    }
    out << (report.chain->sources.empty() ? "]\n" : "\n    ]\n");
    out << "  },\n";
  } else {
    out << "null,\n";
  }

  out << "  \"manifold\": ";
  if (report.manifold.has_value()) {
    out << "{\"dim\": " << report.manifold->dim << ", \"simplices\": [";
    for (std::size_t i = 0; i < report.manifold->simplices.size(); ++i) {
      if (i > 0) out << ", ";
      write_uint_array(out, report.manifold->simplices[i]);
    }
    out << "]},\n";
  } else {
    out << "null,\n";
  }

  out << "  \"timings_ms\": {\"normalize\": " << fmt(report.timings.normalize_ms)
      << ", \"scan\": " << fmt(report.timings.scan_ms)
      << ", \"manifold\": " << fmt(report.timings.manifold_ms)
      << ", \"total\": " << fmt(report.timings.total_ms) << "}\n";
  out << "}\n";
  return out.str();
}

void emit_report(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::io_error, "cannot write " + path);
  }
  out << report_to_json(report);
  if (!out) {
    throw Error(ErrorCode::io_error, "write failed: " + path);
  }
}

namespace {

using Json = nlohmann::json;

const Json& require(const Json& node, const char* key) {
  auto it = node.find(key);
  if (it == node.end()) {
    throw Error(ErrorCode::parse_error,
                std::string("report is missing key \"") + key + '"');
  }
  return *it;
}

std::vector<std::uint32_t> uint_array(const Json& node) {
  std::vector<std::uint32_t> out;
  out.reserve(node.size());
  for (const auto& v : node) out.push_back(v.get<std::uint32_t>());
  return out;
}

std::vector<double> double_array(const Json& node) {
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) out.push_back(v.get<double>());
  return out;
}

NotFoundReason reason_from_string(const std::string& name) {
  if (name == "empty-after-filter") return NotFoundReason::empty_after_filter;
  if (name == "resolution-cap-exceeded") {
    return NotFoundReason::resolution_cap_exceeded;
  }
  if (name == "coverage-too-low") return NotFoundReason::coverage_too_low;
  throw Error(ErrorCode::parse_error, "unknown not-found reason: " + name);
}

}  // namespace

RunReport parse_report_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error,
                std::string("bad report JSON: ") + e.what());
  }

  RunReport report;
  report.schema_version = require(doc, "schema_version").get<std::uint32_t>();

  const Json& cfg = require(doc, "config");
  report.config.volume_limit = require(cfg, "volume_limit").get<double>();
  report.config.coverage_fraction =
      require(cfg, "coverage_fraction").get<double>();
  const Json& density = require(cfg, "density");
  const std::string density_kind = require(density, "kind").get<std::string>();
  if (density_kind == "fraction") {
    report.config.density =
        DensityThreshold::from_fraction(require(density, "value").get<double>());
  } else if (density_kind == "absolute") {
    report.config.density = DensityThreshold::from_absolute(
        require(density, "value").get<std::uint32_t>());
  } else {
    throw Error(ErrorCode::parse_error,
                "unknown density kind: " + density_kind);
  }
  const std::string cap = require(cfg, "cap_policy").get<std::string>();
  if (cap == "full") {
    report.config.cap_policy = ResolutionCapPolicy::full;
  } else if (cap == "half") {
    report.config.cap_policy = ResolutionCapPolicy::half;
  } else {
    throw Error(ErrorCode::parse_error, "unknown cap policy: " + cap);
  }
  report.config.start_resolution =
      require(cfg, "start_resolution").get<std::uint32_t>();
  report.manifold_dim = require(cfg, "manifold_dim").get<std::uint32_t>();

  const Json& dataset = require(doc, "dataset");
  report.dataset_points = require(dataset, "points").get<std::size_t>();
  report.dataset_dim = require(dataset, "dim").get<std::uint32_t>();

  const Json& outcome = require(doc, "outcome");
  const Json& reason = require(outcome, "reason");
  if (!reason.is_null()) {
    report.outcome.reason = reason_from_string(reason.get<std::string>());
  }

  for (const Json& entry : require(doc, "trace")) {
    TraceEntry t;
    t.resolution = require(entry, "resolution").get<std::uint32_t>();
    t.occupied_cells = require(entry, "occupied_cells").get<std::size_t>();
    t.kept_cells = require(entry, "kept_cells").get<std::size_t>();
    t.total_volume = require(entry, "total_volume").get<double>();
    t.covered = require(entry, "covered").get<std::size_t>();
    report.outcome.trace.push_back(t);
  }

  const Json& kept = require(doc, "kept");
  if (!kept.is_null()) {
    KeptCells cells;
    cells.resolution.cells_per_axis =
        require(kept, "resolution").get<std::uint32_t>();
    cells.resolution.dim = report.dataset_dim;
    cells.filter_threshold =
        require(kept, "filter_threshold").get<std::uint32_t>();
    for (const Json& cell : require(kept, "cells")) {
      KeptCell k;
      k.index = uint_array(require(cell, "index"));
      k.center = double_array(require(cell, "center"));
      k.count = require(cell, "count").get<std::uint32_t>();
      cells.cells.push_back(std::move(k));
    }
    report.outcome.kept = std::move(cells);
  }

  const Json& chain = require(doc, "chain");
  if (!chain.is_null()) {
    Chain c;
    for (const Json& v : require(chain, "vertices")) {
      c.vertices.push_back(double_array(v));
    }
    for (const Json& s : require(chain, "sources")) {
      c.sources.push_back(uint_array(s));
    }
    report.chain = std::move(c);
  }

  const Json& manifold = require(doc, "manifold");
  if (!manifold.is_null()) {
    PiecewiseLinearManifold m;
    m.dim = require(manifold, "dim").get<std::uint32_t>();
    for (const Json& s : require(manifold, "simplices")) {
      m.simplices.push_back(uint_array(s));
    }
    report.manifold = std::move(m);
  }

  const Json& timings = require(doc, "timings_ms");
  report.timings.normalize_ms = require(timings, "normalize").get<double>();
  report.timings.scan_ms = require(timings, "scan").get<double>();
  report.timings.manifold_ms = require(timings, "manifold").get<double>();
  report.timings.total_ms = require(timings, "total").get<double>();

  return report;
}

RunReport load_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io_error, "cannot open " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_report_json(buffer.str());
}

}  // namespace gridscan
