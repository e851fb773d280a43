#include "orb/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orb/birch.hpp"
#include "orb/eigentable.hpp"
#include "orb/errors.hpp"
#include "orb/feasibility.hpp"
#include "orb/fixtures.hpp"
#include "orb/orbitals.hpp"
#include "orb/tensor.hpp"

#ifndef ORB_DEFAULT_GOLDEN_DIR
#define ORB_DEFAULT_GOLDEN_DIR "tests/golden"
#endif

namespace orb {
namespace {

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const char* yn(bool b) { return b ? "yes" : "no"; }
const char* jbool(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::BadInput, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// analyze — full pair-orbit report for one group.
// ---------------------------------------------------------------------------

struct AnalyzeReport {
  std::string source;
  GroupData group;  // enumerated
  OrbitalDecomposition od;
  IntersectionTensor tensor;
  bool primitive_blocks = false;
  bool primitive_connectivity = false;
  std::optional<EigenvalueTable> table;
  std::string table_note;  // why the table is absent, when it is
};

AnalyzeReport analyze_group(const std::string& source, GroupData g) {
  AnalyzeReport rep;
  rep.source = source;
  rep.group = g.enumerated() ? std::move(g) : enumerate_group(g);
  rep.od = orbital_decomposition(rep.group);
  rep.tensor = intersection_tensor(rep.od);
  rep.primitive_blocks = is_primitive_blocks(rep.group);
  rep.primitive_connectivity = connectivity_primitive(rep.od);
  require_internal(rep.primitive_blocks == rep.primitive_connectivity,
                   "block-system and connectivity primitivity criteria disagree on " + source);
  if (!rep.tensor.commutative()) {
    rep.table_note = error_code_name(ErrorCode::NonCommutative);
  } else {
    try {
      rep.table = eigentable(rep.od, rep.tensor);
    } catch (const Error& e) {
      // Commutative but outside the quadratic-eigenvalue scope (e.g. a
      // regular cyclic action with higher-degree cyclotomic eigenvalues):
      // still a complete analysis, just without a table.
      if (e.code() == ErrorCode::Internal) throw;
      rep.table_note = error_code_name(e.code());
    }
  }
  return rep;
}

std::string analyze_tsv(const AnalyzeReport& rep) {
  std::string out = "source\t" + rep.source + "\n";
  out += "degree\t" + std::to_string(rep.group.degree) + "\n";
  out += "order\t" + std::to_string(rep.group.order) + "\n";
  out += "rank\t" + std::to_string(rep.od.r) + "\n";
  out += "subdegrees";
  for (long long m : rep.od.subdegrees) out += "\t" + std::to_string(m);
  out += "\npairing";
  for (int q : rep.od.pairing) out += "\t" + std::to_string(q);
  out += "\n";
  out += std::string("primitive-blocks\t") + yn(rep.primitive_blocks) + "\n";
  out += std::string("primitive-connectivity\t") + yn(rep.primitive_connectivity) + "\n";
  out += std::string("commutative\t") + yn(rep.tensor.commutative()) + "\n";
  for (int i = 0; i < rep.tensor.r; ++i)
    for (int j = 0; j < rep.tensor.r; ++j) {
      out += "tensor\t" + std::to_string(i) + "\t" + std::to_string(j);
      for (int k = 0; k < rep.tensor.r; ++k) out += "\t" + std::to_string(rep.tensor.at(i, j, k));
      out += "\n";
    }
  if (rep.table) {
    out += "eigentable\n" + eigentable_tsv(*rep.table);
  } else {
    out += "eigentable-skipped\t" + rep.table_note + "\n";
  }
  return out;
}

std::string analyze_json(const AnalyzeReport& rep) {
  std::string out = "{\"source\":\"" + rep.source + "\"";
  out += ",\"degree\":" + std::to_string(rep.group.degree);
  out += ",\"order\":" + std::to_string(rep.group.order);
  out += ",\"rank\":" + std::to_string(rep.od.r);
  out += ",\"subdegrees\":[";
  for (size_t i = 0; i < rep.od.subdegrees.size(); ++i)
    out += (i ? "," : "") + std::to_string(rep.od.subdegrees[i]);
  out += "],\"pairing\":[";
  for (size_t i = 0; i < rep.od.pairing.size(); ++i)
    out += (i ? "," : "") + std::to_string(rep.od.pairing[i]);
  out += "]";
  out += std::string(",\"primitive_blocks\":") + jbool(rep.primitive_blocks);
  out += std::string(",\"primitive_connectivity\":") + jbool(rep.primitive_connectivity);
  out += std::string(",\"commutative\":") + jbool(rep.tensor.commutative());
  out += ",\"tensor\":[";
  for (int i = 0; i < rep.tensor.r; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < rep.tensor.r; ++j) {
      out += j ? ",[" : "[";
      for (int k = 0; k < rep.tensor.r; ++k)
        out += (k ? "," : "") + std::to_string(rep.tensor.at(i, j, k));
      out += "]";
    }
    out += "]";
  }
  out += "]";
  if (rep.table) {
    out += ",\"eigentable\":" + eigentable_json(*rep.table);
  } else {
    out += ",\"eigentable\":null,\"eigentable_skipped\":\"" + rep.table_note + "\"";
  }
  out += "}";
  return out;
}

// ---------------------------------------------------------------------------
// feasible — solver / refutation records per (prime, type).
// ---------------------------------------------------------------------------

std::string none_record(TypeTag tag, long long p, bool json) {
  if (json)
    return "{\"type\":\"" + std::string(type_tag_name(tag)) + "\",\"p\":" + std::to_string(p) +
           ",\"status\":\"none\"}";
  return "type\t" + std::string(type_tag_name(tag)) + "\np\t" + std::to_string(p) +
         "\nstatus\tnone\n";
}

void feasible_records(long long p, const std::optional<TypeTag>& only, bool json,
                      std::vector<std::string>& records) {
  auto emit_params = [&](const FeasibleParameters& fp) {
    records.push_back(json ? parameters_json(fp) : parameters_tsv(fp));
  };
  auto emit_refutation = [&](const Refutation& ref) {
    records.push_back(json ? refutation_json(ref) : refutation_tsv(ref));
  };
  for (const CaseType& ct : all_case_types()) {
    if (only && *only != ct.tag) continue;
    switch (ct.tag) {
      case TypeTag::I:
      case TypeTag::V:
      case TypeTag::VI:
      case TypeTag::VIII:
        emit_refutation(refute_types(p, ct.tag));
        break;
      case TypeTag::II: {
        std::variant<FeasibleParameters, Refutation> result = solve_type_II(p);
        if (const FeasibleParameters* fp = std::get_if<FeasibleParameters>(&result))
          emit_params(*fp);
        else
          emit_refutation(std::get<Refutation>(result));
        break;
      }
      case TypeTag::III:
      case TypeTag::IV:
      case TypeTag::VII: {
        std::vector<FeasibleParameters> sols = ct.tag == TypeTag::III ? solve_type_III(p)
                                               : ct.tag == TypeTag::IV ? solve_type_IV(p)
                                                                       : solve_type_VII(p);
        if (sols.empty()) records.push_back(none_record(ct.tag, p, json));
        for (const FeasibleParameters& fp : sols) emit_params(fp);
        break;
      }
    }
  }
}

int cmd_feasible(std::optional<long long> p, long long min_p, std::optional<long long> max_p,
                 const std::optional<TypeTag>& only, bool json, std::ostream& out) {
  long long lo = 0, hi = 0;
  std::vector<std::string> records;
  if (p) {
    lo = hi = *p;
    feasible_records(*p, only, json, records);
  } else {
    if (!max_p) fail(ErrorCode::BadInput, "feasible needs --p or --max-p");
    lo = std::max<long long>(min_p, 5);
    hi = *max_p;
    if (hi < lo) fail(ErrorCode::BadInput, "--max-p is below the start of the range");
    for (long long q = lo; q <= hi; ++q)
      if (is_prime_ll(q)) feasible_records(q, only, json, records);
  }
  if (json) {
    out << "{\"min_p\":" << lo << ",\"max_p\":" << hi << ",\"results\":[";
    for (size_t i = 0; i < records.size(); ++i) out << (i ? "," : "") << records[i];
    out << "]}\n";
  } else {
    for (size_t i = 0; i < records.size(); ++i) out << (i ? "\n" : "") << records[i];
  }
  return 0;
}

// ---------------------------------------------------------------------------
// scan — degree-equation triples, with optional density summary.
// ---------------------------------------------------------------------------

std::string triple_tsv(const NuTriple& t) {
  std::string out = "triple\t" + std::to_string(t.p);
  for (long long g : t.gamma) out += "\t" + std::to_string(g);
  out += "\t" + std::to_string(t.S) + "\t" + std::to_string(t.D) + "\t" + std::to_string(t.T);
  out += "\t" + std::string(nu_class_name(t.classification));
  out += "\t" + (t.family_a ? std::to_string(*t.family_a) : std::string("-"));
  return out + "\n";
}

std::string triple_json(const NuTriple& t) {
  std::string out = "{\"p\":" + std::to_string(t.p) + ",\"gamma\":[";
  for (size_t i = 0; i < t.gamma.size(); ++i) out += (i ? "," : "") + std::to_string(t.gamma[i]);
  out += "],\"S\":" + std::to_string(t.S) + ",\"D\":" + std::to_string(t.D) +
         ",\"T\":" + std::to_string(t.T);
  out += ",\"class\":\"" + std::string(nu_class_name(t.classification)) + "\"";
  out += ",\"family_a\":" + (t.family_a ? std::to_string(*t.family_a) : std::string("null"));
  return out + "}";
}

int cmd_scan(long long max_p, bool brute, bool density, long long cap, bool json,
             std::ostream& out) {
  if (max_p < 2) fail(ErrorCode::BadInput, "--max-p must be at least 2");
  if (max_p > cap)
    fail(ErrorCode::CapExceeded,
         "scan bound " + std::to_string(max_p) + " exceeds cap " + std::to_string(cap));
  std::vector<NuTriple> triples;
  if (brute) {
    for (long long q = 2; q <= max_p; ++q) {
      if (!is_prime_ll(q)) continue;
      std::vector<NuTriple> here = nu_solutions_bruteforce(q);
      triples.insert(triples.end(), here.begin(), here.end());
    }
  } else {
    triples = birch_factor_scan(max_p, cap);
  }
  std::optional<DensityReport> dr;
  if (density) dr = density_report(max_p, cap);

  if (json) {
    out << "{\"method\":\"" << (brute ? "brute" : "factor") << "\",\"max_p\":" << max_p
        << ",\"count\":" << triples.size() << ",\"triples\":[";
    for (size_t i = 0; i < triples.size(); ++i) out << (i ? "," : "") << triple_json(triples[i]);
    out << "]";
    if (dr) {
      out << ",\"density\":{\"solvable_primes\":[";
      for (size_t i = 0; i < dr->solvable_primes.size(); ++i)
        out << (i ? "," : "") << dr->solvable_primes[i];
      out << "],\"family_prime_count\":" << dr->family_prime_count
          << ",\"sporadic_prime_count\":" << dr->sporadic_prime_count << ",\"ratio_squared\":\""
          << to_string(dr->ratio_squared) << "\",\"ratio\":" << std::to_string(dr->ratio) << "}";
    }
    out << "}\n";
  } else {
    out << "scan\t" << (brute ? "brute" : "factor") << "\n";
    out << "max-p\t" << max_p << "\n";
    for (const NuTriple& t : triples) out << triple_tsv(t);
    out << "count\t" << triples.size() << "\n";
    if (dr) {
      out << "density-solvable-primes";
      for (long long q : dr->solvable_primes) out << "\t" << q;
      out << "\n";
      out << "density-family\t" << dr->family_prime_count << "\n";
      out << "density-sporadic\t" << dr->sporadic_prime_count << "\n";
      out << "density-ratio-squared\t" << to_string(dr->ratio_squared) << "\n";
      out << "density-ratio\t" << std::to_string(dr->ratio) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// tables — evaluated parameter tables under stable content-derived names.
// ---------------------------------------------------------------------------

struct TableEntry {
  std::optional<long long> a;  // family parameter; absent for fixed-p tables
  long long p = 0;
  bool prime = false;
  std::optional<FeasibleParameters> params;
};

struct ParamTable {
  std::string name;
  std::vector<TableEntry> entries;
};

std::vector<ParamTable> build_tables(long long a_max) {
  std::vector<ParamTable> tables;
  for (long long p : {7LL, 19LL, 31LL}) {
    ParamTable t{"vii-p" + std::to_string(p), {}};
    for (FeasibleParameters& fp : solve_type_VII(p))
      t.entries.push_back({std::nullopt, p, true, std::move(fp)});
    tables.push_back(std::move(t));
  }
  auto family = [&](const std::string& name, TypeTag tag, const std::string& label, auto poly) {
    ParamTable t{name, {}};
    for (long long a = 0; a <= a_max; ++a) {
      TableEntry e;
      e.a = a;
      e.p = poly(a);
      e.prime = e.p >= 5 && is_prime_ll(e.p);
      if (e.prime) {
        std::vector<FeasibleParameters> sols;
        if (tag == TypeTag::II) {
          std::variant<FeasibleParameters, Refutation> result = solve_type_II(e.p);
          if (FeasibleParameters* fp = std::get_if<FeasibleParameters>(&result))
            sols.push_back(std::move(*fp));
        } else {
          sols = tag == TypeTag::III ? solve_type_III(e.p) : solve_type_IV(e.p);
        }
        for (FeasibleParameters& fp : sols)
          if (fp.case_label == label) e.params = std::move(fp);
      }
      t.entries.push_back(std::move(e));
    }
    tables.push_back(std::move(t));
  };
  family("ii-i", TypeTag::II, "i", [](long long a) { return 48 * a * a + 30 * a + 5; });
  family("ii-ii", TypeTag::II, "ii", [](long long a) { return 48 * a * a + 66 * a + 23; });
  family("iii-i", TypeTag::III, "i", [](long long a) { return 3 * a * a + 3 * a + 1; });
  family("iii-ii", TypeTag::III, "ii", [](long long a) { return 3 * a * a + 3 * a + 1; });
  family("iv-i", TypeTag::IV, "i", [](long long a) { return 3 * a * a + 3 * a + 1; });
  family("iv-ii", TypeTag::IV, "ii", [](long long a) { return 3 * a * a + 3 * a + 1; });
  return tables;
}

std::string table_tsv(const ParamTable& t) {
  std::string out = "table\t" + t.name + "\n";
  for (const TableEntry& e : t.entries) {
    out += "entry";
    if (e.a) out += "\ta\t" + std::to_string(*e.a);
    out += "\tp\t" + std::to_string(e.p);
    out += std::string("\tprime\t") + yn(e.prime) + "\n";
    if (e.params)
      out += parameters_tsv(*e.params);
    else
      out += "status\tnone\n";
    out += "\n";
  }
  return out;
}

std::string table_json(const ParamTable& t) {
  std::string out = "{\"name\":\"" + t.name + "\",\"entries\":[";
  for (size_t i = 0; i < t.entries.size(); ++i) {
    const TableEntry& e = t.entries[i];
    if (i) out += ",";
    out += "{";
    if (e.a) out += "\"a\":" + std::to_string(*e.a) + ",";
    out += "\"p\":" + std::to_string(e.p);
    out += std::string(",\"prime\":") + jbool(e.prime);
    out += ",\"parameters\":" + (e.params ? parameters_json(*e.params) : std::string("null"));
    out += "}";
  }
  return out + "]}";
}

int cmd_tables(long long a_max, const std::optional<std::string>& out_dir, bool json,
               std::ostream& out) {
  if (a_max < 0) fail(ErrorCode::BadInput, "--a-max must be non-negative");
  std::vector<ParamTable> tables = build_tables(a_max);
  if (out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*out_dir, ec);
    if (ec) fail(ErrorCode::BadInput, "cannot create directory " + *out_dir + ": " + ec.message());
    for (const ParamTable& t : tables) {
      std::filesystem::path path =
          std::filesystem::path(*out_dir) / (t.name + (json ? ".json" : ".tsv"));
      std::ofstream file(path);
      if (!file) fail(ErrorCode::BadInput, "cannot write " + path.string());
      file << (json ? table_json(t) + "\n" : table_tsv(t));
      out << "wrote\t" << path.string() << "\n";
    }
    return 0;
  }
  if (json) {
    out << "{\"a_max\":" << a_max << ",\"tables\":[";
    for (size_t i = 0; i < tables.size(); ++i) out << (i ? "," : "") << table_json(tables[i]);
    out << "]}\n";
  } else {
    for (size_t i = 0; i < tables.size(); ++i) out << (i ? "\n" : "") << table_tsv(tables[i]);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify — builtin fixtures against descriptors and golden tables.
// ---------------------------------------------------------------------------

// Empty result = pass; otherwise the first discrepancy found.
std::string verify_fixture(const std::string& name, const std::string& golden_dir) {
  BuiltinFixture f = build_fixture(name);
  const FixtureDescriptor& d = f.descriptor;
  if (f.group.degree != d.degree)
    return "degree " + std::to_string(f.group.degree) + " != " + std::to_string(d.degree);
  if (f.group.order != d.order)
    return "order " + std::to_string(f.group.order) + " != " + std::to_string(d.order);
  OrbitalDecomposition od = orbital_decomposition(f.group);
  if (od.r != d.rank) return "rank " + std::to_string(od.r) + " != " + std::to_string(d.rank);
  if (od.subdegrees != d.subdegrees) return "subdegrees differ from the descriptor";
  bool prim_blocks = is_primitive_blocks(f.group);
  bool prim_conn = connectivity_primitive(od);
  if (prim_blocks != prim_conn) return "primitivity criteria disagree";
  if (prim_blocks != d.primitive)
    return std::string("primitive ") + yn(prim_blocks) + " != " + yn(d.primitive);
  if (!d.golden.empty()) {
    IntersectionTensor tensor = intersection_tensor(od);
    EigenvalueTable table = eigentable(od, tensor);
    std::string path = golden_dir + "/" + d.golden + ".tsv";
    if (eigentable_tsv(table) != read_file(path)) return "eigentable differs from " + path;
  }
  return "";
}

int cmd_verify(const std::string& golden_dir, bool json, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> results;
  for (const std::string& name : builtin_fixture_names()) {
    std::string detail;
    try {
      detail = verify_fixture(name, golden_dir);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Internal) throw;
      detail = e.what();
    }
    results.emplace_back(name, detail);
  }
  bool all_pass = std::all_of(results.begin(), results.end(),
                              [](const auto& r) { return r.second.empty(); });
  if (json) {
    out << "{\"fixtures\":[";
    for (size_t i = 0; i < results.size(); ++i) {
      out << (i ? "," : "") << "{\"name\":\"" << results[i].first << "\",\"pass\":"
          << jbool(results[i].second.empty());
      if (!results[i].second.empty()) out << ",\"detail\":\"" << results[i].second << "\"";
      out << "}";
    }
    out << "],\"pass\":" << jbool(all_pass) << "}\n";
  } else {
    for (const auto& [name, detail] : results) {
      if (detail.empty())
        out << "PASS\t" << name << "\n";
      else
        out << "FAIL\t" << name << "\t" << detail << "\n";
    }
    out << "verify\t" << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact pair-orbit analysis and degree-3p feasibility toolkit"};
  app.require_subcommand(1);

  std::string format = "tsv";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "pair-orbit decomposition, tensor, primitivity, eigenvalue table");
  std::string builtin_name, file_path;
  CLI::Option* opt_builtin =
      analyze->add_option("--builtin", builtin_name, "builtin fixture name");
  CLI::Option* opt_file =
      analyze->add_option("--file", file_path, "group JSON file ({\"degree\",\"generators\"})");
  opt_builtin->excludes(opt_file);
  add_format(analyze);

  CLI::App* feasible =
      app.add_subcommand("feasible", "parameter solvers and refutations per prime and type");
  long long opt_p = 0, opt_min_p = 5, opt_max_p = 0;
  std::string type_text;
  CLI::Option* p_opt = feasible->add_option("--p", opt_p, "single prime");
  CLI::Option* min_opt = feasible->add_option("--min-p", opt_min_p, "range start (default 5)");
  CLI::Option* max_opt = feasible->add_option("--max-p", opt_max_p, "range end (inclusive)");
  p_opt->excludes(min_opt)->excludes(max_opt);
  feasible->add_option("--type", type_text, "restrict to one decomposition type (I..VIII)");
  add_format(feasible);

  CLI::App* scan = app.add_subcommand("scan", "triple scan for the degree equation");
  long long scan_max_p = 0;
  bool scan_brute = false, scan_density = false;
  scan->add_option("--max-p", scan_max_p, "scan all primes up to this bound")->required();
  scan->add_flag("--brute", scan_brute, "per-prime brute force instead of the factor scan");
  scan->add_flag("--density", scan_density, "append the sparsity summary");
  add_format(scan);

  CLI::App* tables =
      app.add_subcommand("tables", "evaluated parameter tables (fixed-p and family)");
  long long a_max = 4;
  std::string out_dir;
  tables->add_option("--a-max", a_max, "evaluate family tables for a = 0..a-max")
      ->capture_default_str();
  CLI::Option* out_dir_opt =
      tables->add_option("--out-dir", out_dir, "write one file per table instead of stdout");
  add_format(tables);

  CLI::App* verify = app.add_subcommand("verify", "builtin fixtures against stored goldens");
  std::string golden_dir = ORB_DEFAULT_GOLDEN_DIR;
  verify->add_option("--golden-dir", golden_dir, "directory with the golden tables")
      ->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    bool json = format == "json";
    if (analyze->parsed()) {
      if (opt_builtin->count())
        out << (json ? analyze_json : analyze_tsv)(
            analyze_group(builtin_name, build_fixture(builtin_name).group));
      else if (opt_file->count())
        out << (json ? analyze_json : analyze_tsv)(
            analyze_group(file_path, group_from_json(read_file(file_path))));
      else
        fail(ErrorCode::BadInput, "analyze needs --builtin or --file");
      return 0;
    }
    if (feasible->parsed()) {
      std::optional<TypeTag> only;
      if (!type_text.empty()) only = parse_type_tag(type_text);
      return cmd_feasible(p_opt->count() ? std::optional<long long>(opt_p) : std::nullopt,
                          opt_min_p,
                          max_opt->count() ? std::optional<long long>(opt_max_p) : std::nullopt,
                          only, json, out);
    }
    if (scan->parsed()) {
      long long cap = 1000000;
      if (const char* env = std::getenv("ORBTOOL_SEARCH_CAP")) {
        try {
          cap = std::stoll(env);
        } catch (const std::exception&) {
          fail(ErrorCode::BadInput, std::string("ORBTOOL_SEARCH_CAP is not an integer: ") + env);
        }
      }
      return cmd_scan(scan_max_p, scan_brute, scan_density, cap, json, out);
    }
    if (tables->parsed())
      return cmd_tables(a_max,
                        out_dir_opt->count() ? std::optional<std::string>(out_dir) : std::nullopt,
                        json, out);
    if (verify->parsed()) return cmd_verify(golden_dir, json, out);
    fail(ErrorCode::Internal, "no subcommand dispatched");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Internal ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: unexpected: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace orb
