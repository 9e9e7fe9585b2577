#include "xfam/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xfam/constructions.hpp"
#include "xfam/generating.hpp"
#include "xfam/inequalities.hpp"
#include "xfam/search.hpp"
#include "xfam/shifting.hpp"

namespace xfam::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" or empty means stdout.
void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << payload;
}

int resolve_jobs_flag(int jobs_flag) {
  if (jobs_flag > 0) return jobs_flag;
  if (const char* env = std::getenv("XFAM_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // resolved to hardware concurrency downstream
}

json grid_json(const GridBounds& g) {
  return json{{"t_max", g.t_max}, {"k_max", g.k_max}, {"n_max", g.n_max}, {"m_max", g.m_max}};
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs)
    arr.push_back(json{{"m", v.m},
                       {"n", v.n},
                       {"s", v.s},
                       {"k", v.k},
                       {"l", v.l},
                       {"i", v.i},
                       {"t", v.t},
                       {"reason", v.reason}});
  return arr;
}

json audit_json(const AuditReport& r) {
  return json{{"lemma", r.lemma},
              {"grid", grid_json(r.grid)},
              {"tuples_checked", std::to_string(r.tuples_checked)},
              {"violations", violations_json(r.violations)}};
}

json case3_json(const Case3Report& r) {
  return json{
      {"lemma", "case3"},
      {"params", json{{"n", r.n}, {"m", r.m}, {"k", r.k}, {"l", r.l}, {"t", r.t}}},
      {"bound", r.bound.str()},
      {"subcase1",
       json{{"factor_a", r.sub1_factor_a.str()},
            {"factor_b", r.sub1_factor_b.str()},
            {"product", r.sub1_product.str()},
            {"enumerated_a", r.sub1_enum_a.str()},
            {"enumerated_b", r.sub1_enum_b.str()},
            {"below_bound", r.subcase1_below}}},
      {"subcase2",
       json{{"factor_a", r.sub2_factor_a.str()},
            {"factor_b", r.sub2_factor_b.str()},
            {"product", r.sub2_product.str()},
            {"enumerated_a", r.sub2_enum_a.str()},
            {"enumerated_b", r.sub2_enum_b.str()},
            {"below_bound", r.subcase2_below}}},
      {"subcase3",
       json{{"product", r.sub3_product.str()},
            {"at_most_bound", r.subcase3_at_most},
            {"equality", r.subcase3_equality}}},
      {"factors_match", r.factors_match},
      {"ok", r.ok}};
}

json elements_json(Mask a) {
  json arr = json::array();
  for (int e : elements_of(a)) arr.push_back(e);
  return arr;
}

SearchMethod parse_method(const std::string& name) {
  if (name == "antichain") return SearchMethod::Antichain;
  if (name == "raw") return SearchMethod::Raw;
  if (name == "both") return SearchMethod::Both;
  throw CLI::ValidationError("--method", "must be one of antichain|raw|both");
}

std::string tuple_prefix(int n, int m, int k, int l, int t) {
  return "n" + std::to_string(n) + "-m" + std::to_string(m) + "-k" + std::to_string(k) + "-l" +
         std::to_string(l) + "-t" + std::to_string(t);
}

json certificate_json(const SearchCertificate& cert, const std::string& families_dir,
                      const std::string& stem) {
  json optima = json::array();
  for (std::size_t i = 0; i < cert.optima.size(); ++i) {
    const auto& opt = cert.optima[i];
    const std::string base = families_dir + "/" + stem + "-opt" + std::to_string(i);
    const std::string a_file = base + "-A.fam";
    const std::string b_file = base + "-B.fam";
    write_output(a_file, to_family_text(opt.pair.a));
    write_output(b_file, to_family_text(opt.pair.b));
    optima.push_back(
        json{{"descriptor", opt.descriptor}, {"A_file", a_file}, {"B_file", b_file}});
  }
  return json{{"params", json{{"n", cert.n},
                              {"m", cert.m},
                              {"k", cert.k},
                              {"l", cert.l},
                              {"t", cert.t}}},
              {"max_product", cert.max_product.str()},
              {"optima", optima},
              {"method", cert.method},
              {"candidates_enumerated", std::to_string(cert.candidates_enumerated)},
              {"runtime_ms", cert.runtime_ms}};
}

struct CommonFlags {
  std::string out = "-";
  int jobs = 0;
  unsigned long long seed = 0;  // reserved for randomized sampling reproducibility
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out", flags.out, "Output path (default stdout)");
  cmd->add_option("--jobs", flags.jobs, "Worker count (default: XFAM_JOBS or all cores)");
  cmd->add_option("--seed", flags.seed, "Seed for randomized sampling (reserved)");
}

int run_compress(const std::string& in, const CommonFlags& flags) {
  const UniformFamily f = family_from_text(read_file(in));
  write_output(flags.out, to_family_text(compress_to_fixpoint(f)));
  return 0;
}

int run_generators(const std::string& in, const CommonFlags& flags) {
  const UniformFamily f = family_from_text(read_file(in));
  const GeneratorFamily g = minimal_generating_set(f);
  write_output(flags.out, render_family_file(g.ground_size, f.k, g.members));
  return 0;
}

int run_construct(const std::string& family, int n, int m, int k, int l, int t, int r,
                  const std::vector<int>& t_elems, const std::string& outdir,
                  const CommonFlags& flags) {
  if (family == "frankl") {
    write_output(flags.out, to_family_text(frankl_family(n, k, t, r)));
    return 0;
  }
  if (family == "star") {
    const Mask core = mask_from_elements(t_elems, n);
    write_output(flags.out, to_family_text(star(n, k, core)));
    return 0;
  }
  if (family == "extremal-pairs") {
    if (m <= 0) m = n;
    if (l <= 0) l = k;
    json index = json::array();
    const auto pairs = extremal_pairs(n, m, k, l, t);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& e = pairs[i];
      const std::string base =
          outdir + "/extremal-" + tuple_prefix(n, m, k, l, t) + "-" + e.kind;
      write_output(base + "-A.fam", to_family_text(e.pair.a));
      write_output(base + "-B.fam", to_family_text(e.pair.b));
      index.push_back(json{{"kind", e.kind},
                           {"T", elements_json(e.t_core)},
                           {"product", e.product.str()},
                           {"A_file", base + "-A.fam"},
                           {"B_file", base + "-B.fam"}});
    }
    write_output(flags.out, json{{"pairs", index}}.dump(2) + "\n");
    return 0;
  }
  throw CLI::ValidationError("--family", "must be one of frankl|star|extremal-pairs");
}

int run_audit(const std::string& lemma, const GridBounds& grid, int n, int m, int k, int l,
              int t, const CommonFlags& flags) {
  const int jobs = resolve_jobs_flag(flags.jobs);
  if (lemma == "case3") {
    const Case3Report r = case3_product_audit(n, m, k, l, t);
    write_output(flags.out, case3_json(r).dump(2) + "\n");
    return r.ok ? 0 : 1;
  }
  AuditReport report;
  json extra;
  if (lemma == "3.1") {
    report = audit_lemma31(grid, jobs);
    extra = audit_json(audit_lemma31_proof_form(grid, jobs));
  } else if (lemma == "3.2") {
    report = audit_lemma32(grid, jobs);
  } else if (lemma == "3.3") {
    report = audit_lemma33(grid, jobs);
  } else {
    throw CLI::ValidationError("--lemma", "must be one of 3.1|3.2|3.3|case3");
  }
  json doc = audit_json(report);
  if (!extra.is_null()) doc["proof_form"] = extra;
  write_output(flags.out, doc.dump(2) + "\n");
  return report.violations.empty() ? 0 : 1;
}

int run_search(int n, int m, int k, int l, int t, const std::string& method_name_,
               const std::string& families_dir, const CommonFlags& flags) {
  const SearchMethod method = parse_method(method_name_);
  const SearchCertificate cert =
      max_product_search(n, m, k, l, t, method, resolve_jobs_flag(flags.jobs));
  const std::string stem = "search-" + tuple_prefix(n, m, k, l, t);
  write_output(flags.out, certificate_json(cert, families_dir, stem).dump(2) + "\n");
  return 0;
}

int run_paths(const std::string& lemma, int n, int m, int k, int l, int t, int r, int t_prime,
              const std::vector<int>& t_elems, int j, const std::vector<int>& a_elems,
              const std::vector<int>& b_elems, const CommonFlags& flags) {
  if (lemma == "4.1") {
    const int lo = std::min(n, m);
    const Mask t_set = mask_from_elements(t_elems, lo);
    const Mask a = mask_from_elements(a_elems, n);
    const Mask b = mask_from_elements(b_elems, m);
    const DisjointPath path = disjoint_pair_path(n, m, k, l, t, r, t_set, j, a, b);
    json a_seq = json::array(), b_seq = json::array();
    for (Mask x : path.a_seq) a_seq.push_back(elements_json(x));
    for (Mask x : path.b_seq) b_seq.push_back(elements_json(x));
    write_output(flags.out,
                 json{{"lemma", "4.1"}, {"a_seq", a_seq}, {"b_seq", b_seq}}.dump(2) + "\n");
    return 0;
  }
  if (lemma == "4.2") {
    const Mask t_set = mask_from_elements(t_elems, kMaxGround);
    const Mask a = mask_from_elements(a_elems, kMaxGround);
    const Mask b = mask_from_elements(b_elems, kMaxGround);
    const OverlapPath path = constant_overlap_path(t_set, t_prime, a, b);
    json seq = json::array();
    for (Mask x : path.seq) seq.push_back(elements_json(x));
    write_output(flags.out,
                 json{{"lemma", "4.2"}, {"seq", seq}, {"relabel", path.relabel}}.dump(2) + "\n");
    return 0;
  }
  throw CLI::ValidationError("--lemma", "must be 4.1 or 4.2");
}

int run_certify(const std::string& tuples_path, const std::string& outdir,
                const CommonFlags& flags) {
  const int jobs = resolve_jobs_flag(flags.jobs);
  std::istringstream in(read_file(tuples_path));
  json summary = json::array();
  bool all_clean = true;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int n, m, k, l, t;
    if (!(ls >> n >> m >> k >> l >> t)) continue;  // skip blanks
    const std::string prefix = tuple_prefix(n, m, k, l, t);
    json entry{{"params", json{{"n", n}, {"m", m}, {"k", k}, {"l", l}, {"t", t}}}};

    try {
      const BoundReport report = verify_extremal_bound(n, m, k, l, t, SearchMethod::Antichain, jobs);
      const std::string stem = prefix + "-extremal-bound";
      json doc{{"check", "extremal-bound"},
               {"status", report.status},
               {"expected_product", report.expected_product.str()},
               {"certificate", certificate_json(report.certificate, outdir, stem)}};
      write_output(outdir + "/" + stem + ".json", doc.dump(2) + "\n");
      entry["extremal_bound"] = report.status;
      if (report.status != "CONFIRMED") all_clean = false;
    } catch (const std::invalid_argument& e) {
      entry["extremal_bound"] = "SKIPPED";
      entry["reason"] = e.what();
    } catch (const capacity_error& e) {
      entry["extremal_bound"] = "SKIPPED";
      entry["reason"] = e.what();
    }

    // Inequality audits over the tuple's parameter box.
    const GridBounds grid{t, k, n, m};
    const AuditReport audits[] = {audit_lemma31(grid, jobs), audit_lemma32(grid, jobs),
                                  audit_lemma33(grid, jobs)};
    json audit_summary = json::array();
    for (const AuditReport& a : audits) {
      write_output(outdir + "/" + prefix + "-audit-" + a.lemma + ".json",
                   audit_json(a).dump(2) + "\n");
      audit_summary.push_back(json{{"lemma", a.lemma},
                                   {"tuples_checked", std::to_string(a.tuples_checked)},
                                   {"violations", a.violations.size()}});
      if (!a.violations.empty()) all_clean = false;
    }
    entry["audits"] = audit_summary;
    summary.push_back(entry);
  }
  write_output(outdir + "/summary.json",
               json{{"tuples", summary}, {"clean", all_clean}}.dump(2) + "\n");
  write_output(flags.out, std::string(all_clean ? "clean" : "violations") + "\n");
  return all_clean ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact certificates for cross-t-intersecting set families"};
  app.require_subcommand(1);

  // compress
  auto* compress = app.add_subcommand("compress", "Left-compress a family file to its fixpoint");
  std::string compress_in;
  CommonFlags compress_flags;
  compress->add_option("--in", compress_in, "Family file")->required();
  add_common(compress, compress_flags);

  // generators
  auto* generators =
      app.add_subcommand("generators", "Print the canonical minimal generating set");
  std::string generators_in;
  CommonFlags generators_flags;
  generators->add_option("--in", generators_in, "Family file")->required();
  add_common(generators, generators_flags);

  // construct
  auto* construct = app.add_subcommand("construct", "Write a named family");
  std::string construct_family;
  int c_n = 0, c_m = 0, c_k = 0, c_l = 0, c_t = 0, c_r = 0;
  std::vector<int> c_T;
  std::string c_outdir = ".";
  CommonFlags construct_flags;
  construct->add_option("--family", construct_family, "frankl|star|extremal-pairs")->required();
  construct->add_option("--n", c_n, "ground size of A");
  construct->add_option("--m", c_m, "ground size of B (extremal-pairs)");
  construct->add_option("--k", c_k, "uniform size of A");
  construct->add_option("--l", c_l, "uniform size of B (extremal-pairs)");
  construct->add_option("--t", c_t, "intersection threshold");
  construct->add_option("--r", c_r, "Frankl parameter r");
  construct->add_option("--T", c_T, "star core elements (comma separated)")->delimiter(',');
  construct->add_option("--outdir", c_outdir, "directory for extremal-pairs family files");
  add_common(construct, construct_flags);

  // audit
  auto* audit = app.add_subcommand("audit", "Audit an inequality over its grid");
  std::string audit_lemma;
  GridBounds audit_grid;
  int a_n = 0, a_m = 0, a_k = 0, a_l = 0, a_t = 0;
  CommonFlags audit_flags;
  audit->add_option("--lemma", audit_lemma, "3.1|3.2|3.3|case3")->required();
  audit->add_option("--tmax", audit_grid.t_max, "grid cap for t (default 6)");
  audit->add_option("--kmax", audit_grid.k_max, "grid cap for k (default 8)");
  audit->add_option("--nmax", audit_grid.n_max, "grid cap for n (default 60)");
  audit->add_option("--mmax", audit_grid.m_max, "grid cap for m (default 60)");
  audit->add_option("--n", a_n, "case3: n");
  audit->add_option("--m", a_m, "case3: m");
  audit->add_option("--k", a_k, "case3: k");
  audit->add_option("--l", a_l, "case3: l");
  audit->add_option("--t", a_t, "case3: t");
  add_common(audit, audit_flags);

  // search
  auto* search = app.add_subcommand("search", "Exact maximum of |A||B| with certificate");
  int s_n = 0, s_m = 0, s_k = 0, s_l = 0, s_t = 0;
  std::string s_method = "antichain";
  std::string s_families_dir = ".";
  CommonFlags search_flags;
  search->add_option("--n", s_n)->required();
  search->add_option("--m", s_m)->required();
  search->add_option("--k", s_k)->required();
  search->add_option("--l", s_l)->required();
  search->add_option("--t", s_t)->required();
  search->add_option("--method", s_method, "antichain|raw|both (default antichain)");
  search->add_option("--families-dir", s_families_dir,
                     "directory for the optimum family files (default .)");
  add_common(search, search_flags);

  // paths
  auto* paths = app.add_subcommand("paths", "Emit an explicit path construction");
  std::string p_lemma;
  int p_n = 0, p_m = 0, p_k = 0, p_l = 0, p_t = 0, p_r = 0, p_tprime = 0, p_j = 0;
  std::vector<int> p_T, p_A, p_B;
  CommonFlags paths_flags;
  paths->add_option("--lemma", p_lemma, "4.1|4.2")->required();
  paths->add_option("--n", p_n);
  paths->add_option("--m", p_m);
  paths->add_option("--k", p_k);
  paths->add_option("--l", p_l);
  paths->add_option("--t", p_t);
  paths->add_option("--r", p_r);
  paths->add_option("--tprime", p_tprime, "4.2: the exact overlap t'");
  paths->add_option("--T", p_T, "elements of T")->delimiter(',');
  paths->add_option("--j", p_j, "4.1: the spare element j");
  paths->add_option("--A", p_A, "elements of A")->delimiter(',');
  paths->add_option("--B", p_B, "elements of B")->delimiter(',');
  add_common(paths, paths_flags);

  // certify
  auto* certify = app.add_subcommand("certify", "Run bound checks and audits for tuples");
  std::string cert_tuples, cert_outdir = ".";
  CommonFlags certify_flags;
  certify->add_option("--tuples", cert_tuples, "file of \"n m k l t\" lines")->required();
  certify->add_option("--outdir", cert_outdir, "bundle directory (default .)");
  add_common(certify, certify_flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*compress) return run_compress(compress_in, compress_flags);
    if (*generators) return run_generators(generators_in, generators_flags);
    if (*construct)
      return run_construct(construct_family, c_n, c_m, c_k, c_l, c_t, c_r, c_T, c_outdir,
                           construct_flags);
    if (*audit) return run_audit(audit_lemma, audit_grid, a_n, a_m, a_k, a_l, a_t, audit_flags);
    if (*search)
      return run_search(s_n, s_m, s_k, s_l, s_t, s_method, s_families_dir, search_flags);
    if (*paths)
      return run_paths(p_lemma, p_n, p_m, p_k, p_l, p_t, p_r, p_tprime, p_T, p_j, p_A, p_B,
                       paths_flags);
    if (*certify) return run_certify(cert_tuples, cert_outdir, certify_flags);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace xfam::cli
