// hdepth: command-line front end for the Hilbert/Stanley depth engine.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdepth/errors.hpp"
#include "hdepth/json_io.hpp"
#include "hdepth/module_spec.hpp"
#include "hdepth/partition.hpp"
#include "hdepth/stanley.hpp"
#include "hdepth/transport.hpp"

namespace hdepth {
namespace {

using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct Options {
  std::string file;
  bool as_json = false;
  int min_depth = 0;
  bool count = false;
  bool list = false;
  std::size_t limit = 1000;
  std::string partition;
  std::string candidate;
  std::size_t m = 1;
  std::size_t keep = 0;
};

ModuleSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string vars_string(VarSet vars, const ModuleSpec& spec) {
  if (vars.empty()) return "K";
  std::string s = "K[";
  bool first = true;
  for (auto j : vars.indices()) {
    s += (first ? "" : ",") + spec.var_name(j);
    first = false;
  }
  return s + "]";
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json components_json(const HilbertDecomposition& dec) { return to_json(dec); }

void print_components(const HilbertDecomposition& dec, const ModuleSpec& spec) {
  std::cout << "components:\n";
  for (const auto& c : dec.components) std::cout << "  " << c.to_string(spec.var_names) << '\n';
}

int run_hdepth(const Options& o) {
  auto spec = load_spec(o.file);
  auto g = determine_g(spec);
  auto table = hilbert_table(spec, g);
  auto res = hdepth(table);
  auto dec = induced_decomposition(res.witness);
  if (o.as_json) {
    print({{"g", to_json(g)},
           {"table", to_json(table)},
           {"depth", res.depth},
           {"witness", to_json(res.witness)},
           {"components", components_json(dec)}});
    return 0;
  }
  std::cout << "g = " << g.to_string() << '\n'
            << "table = " << table.to_polynomial(spec.var_names) << '\n'
            << "hdepth = " << res.depth << '\n'
            << "witness = " << res.witness.to_string(spec.var_names) << '\n';
  print_components(dec, spec);
  return 0;
}

int run_stdepth(const Options& o) {
  auto spec = load_spec(o.file);
  auto g = determine_g(spec);
  auto table = hilbert_table(spec, g);
  auto res = stdepth(spec);
  if (o.as_json) {
    print({{"g", to_json(g)},
           {"table", to_json(table)},
           {"depth", res.depth},
           {"method", res.used_dim1 ? "dim1" : "general"},
           {"partition", to_json(res.partition)},
           {"witness", to_json(res.witness, spec)},
           {"components", components_json(induced_decomposition(res.partition))}});
    return 0;
  }
  std::cout << "g = " << g.to_string() << '\n'
            << "table = " << table.to_polynomial(spec.var_names) << '\n'
            << "stdepth = " << res.depth << '\n'
            << "method = " << (res.used_dim1 ? "dim1" : "general") << '\n'
            << "partition = " << res.partition.to_string(spec.var_names) << '\n'
            << "stanley decomposition:\n";
  for (const auto& part : res.witness.parts) {
    std::cout << "  (" << part.generator.to_string(spec) << ") " << vars_string(part.vars, spec) << '\n';
  }
  return 0;
}

int run_partitions(const Options& o) {
  auto spec = load_spec(o.file);
  auto g = determine_g(spec);
  auto table = hilbert_table(spec, g);
  if (!o.list) {
    auto n = count_partitions(table, o.min_depth);
    if (o.as_json) {
      print({{"g", to_json(g)}, {"table", to_json(table)}, {"min_depth", o.min_depth}, {"count", n.str()}});
    } else {
      std::cout << n << '\n';
    }
    return 0;
  }
  std::size_t listed = 0;
  bool truncated = false;
  json all = json::array();
  SearchOptions opts{o.min_depth, false, {}};
  for_each_partition(table, opts, [&](const HilbertPartition& p) {
    if (listed == o.limit) {
      truncated = true;
      return false;
    }
    ++listed;
    if (o.as_json) {
      all.push_back(to_json(p));
    } else {
      std::cout << p.to_string(spec.var_names) << '\n';
    }
    return true;
  });
  if (o.as_json) {
    print({{"g", to_json(g)},
           {"min_depth", o.min_depth},
           {"count", listed},
           {"truncated", truncated},
           {"partitions", all}});
  } else if (truncated) {
    std::cout << "... stopped after " << o.limit << " partitions\n";
  }
  return 0;
}

int run_decompose(const Options& o) {
  auto spec = load_spec(o.file);
  auto p = partition_from_json(load_json_argument(o.partition));
  auto table = hilbert_table(spec, p.g);
  validate_partition(p, table);
  auto dec = induced_decomposition(p);
  int d = depth_of_partition(p);
  if (o.as_json) {
    print({{"g", to_json(p.g)}, {"depth", d}, {"components", components_json(dec)}});
    return 0;
  }
  std::cout << "g = " << p.g.to_string() << '\n' << "depth = " << d << '\n';
  print_components(dec, spec);
  return 0;
}

int run_check(const Options& o) {
  auto spec = load_spec(o.file);
  auto g = determine_g(spec);
  auto cand = candidate_from_json(load_json_argument(o.candidate));
  auto verdict = check_stanley_candidate(spec, cand, g);
  if (o.as_json) {
    print({{"g", to_json(g)},
           {"passed", verdict.passed},
           {"failure", verdict.failure},
           {"depth", cand.decomposition.depth(spec.n)}});
    return 0;
  }
  if (verdict) {
    std::cout << "pass: Stanley decomposition of depth " << cand.decomposition.depth(spec.n) << '\n';
  } else {
    std::cout << "fail: " << verdict.failure << '\n';
  }
  return 0;
}

int run_extend(const Options& o) {
  std::cout << spec_to_json(extend_scalars(load_spec(o.file), o.m)) << '\n';
  return 0;
}

int run_specialize(const Options& o) {
  std::cout << spec_to_json(specialize_ideal_spec(load_spec(o.file), o.keep)) << '\n';
  return 0;
}

}  // namespace
}  // namespace hdepth

int main(int argc, char** argv) {
  using namespace hdepth;
  CLI::App app{"Hilbert depth and Stanley depth of multigraded modules"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "module spec (JSON)")->required();
    sub->add_flag("--json", o.as_json, "machine-readable report");
  };

  auto* h = app.add_subcommand("hdepth", "Hilbert depth with a witness partition");
  add_common(h);
  auto* s = app.add_subcommand("stdepth", "Stanley depth with a witness decomposition");
  add_common(s);
  auto* p = app.add_subcommand("partitions", "count or list Hilbert partitions");
  add_common(p);
  p->add_option("--min-depth", o.min_depth, "keep partitions of depth at least D")->required();
  auto* count = p->add_flag("--count", o.count, "print the number of partitions");
  p->add_flag("--list", o.list, "list partitions in canonical order")->excludes(count);
  p->add_option("--limit", o.limit, "stop listing after N partitions")->capture_default_str();
  auto* d = app.add_subcommand("decompose", "induced decomposition of a partition");
  add_common(d);
  d->add_option("--partition", o.partition, "partition JSON, inline or a file")->required();
  auto* c = app.add_subcommand("check", "check explicit Stanley generators");
  add_common(c);
  c->add_option("--candidate", o.candidate, "candidate JSON, inline or a file")->required();
  auto* e = app.add_subcommand("extend", "scalar extension by m new variables");
  add_common(e);
  e->add_option("-m", o.m, "number of new variables")->required();
  auto* sp = app.add_subcommand("specialize", "set trailing variables to 1 (ideal specs only)");
  add_common(sp);
  sp->add_option("--keep", o.keep, "number of leading variables kept")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (h->parsed()) return run_hdepth(o);
    if (s->parsed()) return run_stdepth(o);
    if (p->parsed()) return run_partitions(o);
    if (d->parsed()) return run_decompose(o);
    if (c->parsed()) return run_check(o);
    if (e->parsed()) return run_extend(o);
    return run_specialize(o);
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitParse;
  } catch (const DimensionError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitParse;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "error: malformed JSON: " << err.what() << '\n';
    return kExitParse;
  } catch (const std::exception& err) {
    // Precondition, domain, unsupported and inconsistency failures.
    std::cerr << "error: " << err.what() << '\n';
    return kExitPrecondition;
  }
}
