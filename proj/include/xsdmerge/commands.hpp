#pragma once

// Command implementations behind the xsdmerge executable. Each returns the
// process exit code: 0 success, 1 I/O or parse failure, 2 invalid severity
// (match/integrate) or empty gold standard (eval).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xsdmerge/dictionaries.hpp"
#include "xsdmerge/eval.hpp"
#include "xsdmerge/instance_reader.hpp"
#include "xsdmerge/integrator.hpp"
#include "xsdmerge/interscheme.hpp"
#include "xsdmerge/json_io.hpp"
#include "xsdmerge/schema_model.hpp"
#include "xsdmerge/thesaurus.hpp"
#include "xsdmerge/xs_graph.hpp"

namespace xsdmerge::cli {

inline constexpr const char* kThesaurusEnv = "XSDMERGE_THESAURUS";

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_output(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file || !(file << text)) throw Error(ErrorCode::IoError, "cannot write '" + *path + "'");
}

/// Explicit path, else $XSDMERGE_THESAURUS, else an empty thesaurus.
inline Thesaurus resolve_thesaurus(const std::optional<std::string>& path) {
  if (path) return load_thesaurus(*path);
  if (const char* env = std::getenv(kThesaurusEnv); env != nullptr && *env != '\0') return load_thesaurus(env);
  return Thesaurus{};
}

struct LoadedSchema {
  SchemaModel model;
  RefTargetMap refs;
  XsGraph graph;
};

inline LoadedSchema load_schema(const std::string& path, const std::string& schema_id,
                                const std::vector<std::string>& instance_paths, std::ostream& err) {
  auto model = parse_schema(read_file(path), schema_id);
  std::vector<std::string> docs;
  for (const auto& p : instance_paths) docs.push_back(read_file(p));
  auto refs = resolve_idrefs(model, docs);
  for (const auto& f : refs.failures) err << "warning: " << instance_paths[f.document] << ": " << f.message << '\n';
  auto graph = build_xs_graph(model, refs);
  return {std::move(model), std::move(refs), std::move(graph)};
}

struct PipelineOptions {
  std::string schema1;
  std::string schema2;
  long long severity = 0;
  std::optional<std::string> thesaurus;
  std::vector<std::string> instances1;
  std::vector<std::string> instances2;
  std::optional<std::string> out;
};

struct MatchOptions : PipelineOptions {
  bool dictionaries = false;
};

struct IntegrateCommandOptions : PipelineOptions {
  std::string root_name = "root";
  std::optional<std::string> audit;
};

namespace detail {

inline int report(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return e.code() == ErrorCode::SeverityOutOfRange ? 2 : 1;
}

inline Severity checked_severity(long long requested, const LoadedSchema& a, const LoadedSchema& b) {
  const auto bound = max_severity(a.model, b.model);
  if (requested < 0 || static_cast<unsigned long long>(requested) > bound) {
    throw Error(ErrorCode::SeverityOutOfRange,
                "severity " + std::to_string(requested) + " is outside 0.." + std::to_string(bound) +
                    " (one less than the larger number of complex elements)");
  }
  return static_cast<Severity>(requested);
}

}  // namespace detail

inline int cmd_match(const MatchOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto thesaurus = resolve_thesaurus(options.thesaurus);
    auto s1 = load_schema(options.schema1, "S1", options.instances1, err);
    auto s2 = load_schema(options.schema2, "S2", options.instances2, err);
    const auto u = detail::checked_severity(options.severity, s1, s2);
    auto doc = json_io::to_json(extract_properties(s1.graph, s2.graph, u, thesaurus));
    if (options.dictionaries) {
      auto md = build_md(s1.model, s2.model, u, s1.graph, s2.graph, thesaurus);
      auto rd = build_rd(s1.model, s2.model, md);
      doc["merge_dictionary"] = json_io::to_json(md);
      doc["rename_dictionary"] = json_io::to_json(rd);
    }
    write_output(options.out, doc.dump(2) + "\n", out);
    return 0;
  } catch (const Error& e) {
    return detail::report(e, err);
  }
}

inline int cmd_integrate(const IntegrateCommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto thesaurus = resolve_thesaurus(options.thesaurus);
    auto s1 = load_schema(options.schema1, "S1", options.instances1, err);
    auto s2 = load_schema(options.schema2, "S2", options.instances2, err);
    const auto u = detail::checked_severity(options.severity, s1, s2);
    auto md = build_md(s1.model, s2.model, u, s1.graph, s2.graph, thesaurus);
    auto rd = build_rd(s1.model, s2.model, md);
    IntegrateOptions integrate_options;
    integrate_options.root_name = options.root_name;
    auto result = integrate_with_audit(s1.model, s2.model, md, rd, integrate_options);
    write_output(options.out, serialize_schema(result.schema), out);
    if (options.audit) write_output(options.audit, json_io::audit_json(result).dump(2) + "\n", out);
    return 0;
  } catch (const Error& e) {
    return detail::report(e, err);
  }
}

struct NeighborhoodOptions {
  std::string schema;
  std::optional<std::string> component;
  std::uint32_t level = 0;
  std::vector<std::string> instances;
};

/// One `<name> [<typology>]` line per member. Without a component, every
/// complex element's neighborhood is printed under a `# name` header.
inline int cmd_neighborhood(const NeighborhoodOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto s = load_schema(options.schema, "S", options.instances, err);
    auto print = [&](const XComponent& x) {
      for (const auto& c : neighborhood(s.graph, x, options.level)) {
        out << c.name << " [" << to_string(c.typology) << "]\n";
      }
    };
    if (options.component) {
      const XComponent* x = s.model.find_element(*options.component);
      if (x == nullptr) x = s.model.find_attribute(*options.component);
      if (x == nullptr) throw Error(ErrorCode::UnknownComponent, "'" + *options.component + "' is not declared");
      print(*x);
      return 0;
    }
    auto nodes = s.graph.nodes();
    std::sort(nodes.begin(), nodes.end(), ComponentOrder{});
    for (const auto& x : nodes) {
      if (x.typology != Typology::ComplexElement) continue;
      out << "# " << x.name << '\n';
      print(x);
    }
    return 0;
  } catch (const Error& e) {
    return detail::report(e, err);
  }
}

inline int cmd_eval(const std::string& properties_path, const std::string& gold_path, std::ostream& out,
                    std::ostream& err) {
  PropertyKeys returned;
  GoldStandard gold;
  try {
    auto parse = [](const std::string& path) {
      try {
        return nlohmann::json::parse(read_file(path));
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::FormatError, path + ": " + e.what());
      }
    };
    returned = read_property_keys(parse(properties_path));
    gold = read_gold(parse(gold_path));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (gold.properties.empty()) {
    err << "error: gold standard contains no properties\n";
    return 2;
  }
  auto m = evaluate(returned, gold);
  if (m.empty_returned) err << "warning: no properties returned; correctness reported as 1.00\n";
  out << "returned: " << m.returned << '\n';
  out << "gold: " << m.gold << '\n';
  out << "agreeing: " << m.agreeing << '\n';
  out << "correctness: " << two_decimals(m.correctness) << '\n';
  out << "completeness: " << two_decimals(m.completeness) << '\n';
  return 0;
}

}  // namespace xsdmerge::cli
