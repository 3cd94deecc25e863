#include "hyperarr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <thread>

#include "hyperarr/errors.hpp"
#include "hyperarr/generator.hpp"
#include "hyperarr/json_io.hpp"
#include "hyperarr/subsets.hpp"

namespace hyperarr::cli {

namespace {

struct GlobalOpts {
  std::string format = "table";
  int threads_flag = 0;  // 0 = unset
  bool verify = false;
};

const CLI::Validator positive_int(
    [](std::string& s) -> std::string {
      try {
        if (std::stoll(s) >= 1) return {};
      } catch (...) {
      }
      return "must be a positive integer, got '" + s + "'";
    },
    "POSITIVE");

int resolve_threads(const GlobalOpts& g) {
  if (g.threads_flag > 0) return g.threads_flag;
  if (const char* env = std::getenv("HYPERARR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 4096)
      return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::string fmt_set(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

std::string fmt_blocks(const std::array<std::vector<int>, 3>& blocks) {
  return fmt_set(blocks[0]) + " " + fmt_set(blocks[1]) + " " + fmt_set(blocks[2]);
}

std::string fmt_pairing(const Pairing& p) {
  std::string out;
  for (const auto& pair : p)
    out += "(" + std::to_string(pair[0] + 1) + "," + std::to_string(pair[1] + 1) + ")";
  return out;
}

// The three discriminantal index sets selected by a partition.
std::array<std::vector<int>, 3> partition_triple(const GoodPartition& p) {
  std::array<std::vector<int>, 3> t;
  for (int i = 0; i < 3; ++i)
    t[i] = sorted_union(p.blocks()[i], p.tail());
  std::sort(t.begin(), t.end());
  return t;
}

GoodPartition pairing_partition(const Pairing& q) {
  return GoodPartition(std::array<std::vector<int>, 3>{
      sorted_union({q[0][0], q[0][1]}, {q[1][0], q[1][1]}),
      sorted_union({q[0][0], q[0][1]}, {q[2][0], q[2][1]}),
      sorted_union({q[1][0], q[1][1]}, {q[2][0], q[2][1]})});
}

int verify_failed(std::ostream& err, const std::string& detail) {
  err << "verify: cross-check disagreement: " << detail << "\n";
  return 1;
}

int cmd_check_generic(const Arrangement& a, const GlobalOpts& g,
                      std::ostream& out, std::ostream& err) {
  const GenericityReport r = check_generic(a);
  if (g.verify) {
    // Independent route: the first rank-deficient k-subset found by rational
    // row reduction must match the determinant scan's verdict and witness.
    std::vector<int> all_cols(a.k());
    for (int c = 0; c < a.k(); ++c) all_cols[c] = c;
    const Matrix m = a.normal_matrix();
    std::vector<int> first_bad;
    for (const auto& rows : subsets(a.n(), a.k())) {
      if (rref(submatrix(m, rows, all_cols)).rows() < a.k()) {
        first_bad = rows;
        break;
      }
    }
    if (first_bad.empty() != r.generic || (!r.generic && first_bad != r.witness))
      return verify_failed(err, "rank and determinant scans disagree");
  }
  if (g.format == "json") {
    out << genericity_to_json(r).dump(2) << "\n";
  } else if (r.generic) {
    out << "generic\n";
  } else {
    out << "not generic: normals " << fmt_set(r.witness)
        << " are linearly dependent\n";
  }
  return r.generic ? 0 : 1;
}

int cmd_plucker(const Arrangement& a, const GlobalOpts& g, std::ostream& out,
                std::ostream& err) {
  const PluckerTable t = plucker_coords(a);
  if (g.verify) {
    const PluckerCheck chk = check_plucker_relations(t);
    if (!chk.ok)
      return verify_failed(err, "exchange relation violated at " +
                                    fmt_set(chk.violation->left) + " x " +
                                    fmt_set(chk.violation->right));
  }
  if (g.format == "json") {
    out << plucker_to_json(t).dump(2) << "\n";
    return 0;
  }
  out << "n " << t.n << "  k " << t.k << "\n";
  for (const auto& [subset, value] : t.values) {
    std::string key;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(subset[i] + 1);
    }
    out << "[" << key << "] " << value.str() << "\n";
  }
  out << "all_nonzero " << (t.all_nonzero ? "yes" : "no") << "\n";
  return 0;
}

int cmd_strata(const Arrangement& a, const GlobalOpts& g, std::ostream& out,
               std::ostream& err) {
  CensusOptions opts;
  opts.threads = resolve_threads(g);
  const StrataCensus c = strata_census(a, opts);
  if (g.verify) {
    for (const auto& t : c.multiplicity3_triples)
      if (triple_codim(a, t[0], t[1], t[2]) != 2)
        return verify_failed(err, "reported triple is not rank 2");
    std::set<std::array<std::vector<int>, 3>> from_scan;
    for (const GoodPartition& p : find_dependent(a))
      from_scan.insert(partition_triple(p));
    const std::set<std::array<std::vector<int>, 3>> from_census(
        c.multiplicity3_triples.begin(), c.multiplicity3_triples.end());
    if (from_scan != from_census)
      return verify_failed(err,
                           "partition scan and census disagree on "
                           "multiplicity-3 strata");
  }
  if (g.format == "json") {
    out << census_to_json(c).dump(2) << "\n";
    return 0;
  }
  out << "n " << c.n << "  k " << c.k << "  hyperplanes " << c.hyperplanes << "\n";
  out << "multiplicity  strata\n";
  for (const auto& [mult, count] : c.census)
    out << std::left << std::setw(14) << mult << count << "\n";
  if (!c.multiplicity3_triples.empty()) {
    out << "dependent triples:\n";
    for (const auto& t : c.multiplicity3_triples)
      out << fmt_set(t[0]) << " " << fmt_set(t[1]) << " " << fmt_set(t[2]) << "\n";
  }
  return 0;
}

int cmd_partitions(const Arrangement& a, const GlobalOpts& g, bool dependent_only,
                   std::ostream& out, std::ostream& err) {
  if (a.k() != 3)
    throw DomainError("partitions: this command is defined for k = 3 inputs");
  require_generic(a, "partitions");
  const auto list = enumerate_good_partitions(a.n(), 2);
  std::vector<std::pair<const GoodPartition*, Rational>> rows;
  std::uint64_t dependent_count = 0;
  for (const GoodPartition& p : list) {
    Rational psum = minor_square_sum(a, p);
    const bool dep = psum.is_zero();
    if (g.verify) {
      const bool by_rank = rank(triple_matrix(a, p)) == 2;
      const bool by_kernels = is_dependent(a, p);
      const bool by_kernel_minors = kernel_minor_square_sum(a, p).is_zero();
      if (dep != by_rank || dep != by_kernels || dep != by_kernel_minors)
        return verify_failed(err, "dependence predicates disagree on " +
                                      fmt_blocks(p.blocks()));
    }
    if (dep) ++dependent_count;
    if (!dependent_only || dep) rows.emplace_back(&p, std::move(psum));
  }
  if (g.format == "json") {
    json doc;
    doc["n"] = a.n();
    doc["k"] = a.k();
    doc["s"] = 2;
    json parts = json::array();
    for (const auto& [p, psum] : rows) {
      json e = partition_to_json(*p);
      e["dependent"] = psum.is_zero();
      e["minor_square_sum"] = psum.str();
      parts.push_back(std::move(e));
    }
    doc["partitions"] = std::move(parts);
    doc["summary"] = json{{"checked", list.size()}, {"dependent", dependent_count}};
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "n " << a.n() << "  k " << a.k() << "  s 2\n";
  for (const auto& [p, psum] : rows)
    out << fmt_blocks(p->blocks()) << "  "
        << (psum.is_zero() ? "dependent" : "independent")
        << "  minor_square_sum " << psum.str() << "\n";
  out << "checked " << list.size() << ", dependent " << dependent_count << "\n";
  return 0;
}

int cmd_quadric(const Arrangement& a, const GlobalOpts& g,
                const std::vector<int>& support_flag, std::ostream& out,
                std::ostream& err) {
  std::optional<std::vector<int>> support;
  if (!support_flag.empty()) {
    std::vector<int> s;
    for (int i : support_flag) {
      if (i < 1) throw DomainError("quadric: support indices are 1-based");
      s.push_back(i - 1);
    }
    support = std::move(s);
  }
  const QuadricScan scan = quadric_scan(a, support, resolve_threads(g));
  if (g.verify) {
    for (const QuadricEntry& e : scan.entries)
      if (e.vanishes != is_dependent(a, pairing_partition(e.pairing)))
        return verify_failed(err, "quadric and kernel test disagree at " +
                                      fmt_pairing(e.pairing));
  }
  if (g.format == "json") {
    out << quadric_scan_to_json(scan).dump(2) << "\n";
    return 0;
  }
  for (const QuadricEntry& e : scan.entries)
    if (e.vanishes)
      out << "support " << fmt_set(e.support) << "  pairing "
          << fmt_pairing(e.pairing) << "  value " << e.value.str() << "\n";
  out << "checked " << scan.checked << ", vanishing " << scan.vanishing << "\n";
  return 0;
}

int cmd_generate(const GenerateOptions& opts, const std::string& output_path,
                 const GlobalOpts& g, std::ostream& out, std::ostream& err) {
  const Generated gen = generate(opts);
  if (g.verify) {
    if (!is_generic(gen.arrangement))
      return verify_failed(err, "generated arrangement is not generic");
    if (gen.certificate && !is_dependent(gen.arrangement, *gen.certificate))
      return verify_failed(err, "certificate partition is not dependent");
  }
  json doc = arrangement_to_json(gen.arrangement);
  doc["generated"] = json{{"kind", opts.kind}, {"seed", opts.seed}};
  if (gen.certificate) doc["certificate"] = partition_to_json(*gen.certificate);

  if (!output_path.empty()) {
    std::ofstream f(output_path);
    if (!f) throw ParseError("cannot write output file: " + output_path);
    f << doc.dump(2) << "\n";
    if (g.format == "json") {
      json note;
      note["written"] = output_path;
      note["kind"] = opts.kind;
      note["n"] = opts.n;
      note["k"] = opts.k;
      note["seed"] = opts.seed;
      if (gen.certificate) note["certificate"] = partition_to_json(*gen.certificate);
      out << note.dump(2) << "\n";
    } else {
      out << "wrote " << output_path << " (kind " << opts.kind << ", n " << opts.n
          << ", k " << opts.k << ", seed " << opts.seed << ")\n";
      if (gen.certificate)
        out << "certificate: " << fmt_blocks(gen.certificate->blocks()) << "\n";
    }
    return 0;
  }

  if (g.format == "json") {
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "kind " << opts.kind << "  n " << opts.n << "  k " << opts.k << "  seed "
      << opts.seed << "\n";
  for (int i = 0; i < gen.arrangement.n(); ++i) {
    out << "normal " << (i + 1) << ":";
    for (const Rational& x : gen.arrangement.normal(i)) out << " " << x.str();
    out << "\n";
  }
  if (gen.certificate)
    out << "certificate: " << fmt_blocks(gen.certificate->blocks()) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact tools for discriminantal hyperplane arrangements"};
  app.name("hyperarr");
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", g.threads_flag,
                 "worker threads (default: HYPERARR_THREADS, else hardware)")
      ->check(positive_int);
  app.add_flag("--verify", g.verify,
               "re-derive results along an independent route and fail on "
               "disagreement");

  std::string in_check, in_plucker, in_strata, in_partitions, in_quadric;
  CLI::App* sub_check =
      app.add_subcommand("check-generic", "test whether every k normals are independent");
  sub_check->fallthrough();
  sub_check->add_option("-i,--input", in_check, "arrangement JSON file")->required();

  CLI::App* sub_plucker =
      app.add_subcommand("plucker", "maximal-minor table of the normal matrix");
  sub_plucker->fallthrough();
  sub_plucker->add_option("-i,--input", in_plucker, "arrangement JSON file")->required();

  CLI::App* sub_strata = app.add_subcommand(
      "strata", "codimension-2 census of the derived arrangement");
  sub_strata->fallthrough();
  sub_strata->add_option("-i,--input", in_strata, "arrangement JSON file")->required();

  bool dependent_only = false;
  CLI::App* sub_partitions = app.add_subcommand(
      "partitions", "good 4-block partitions and their dependence");
  sub_partitions->fallthrough();
  sub_partitions->add_option("-i,--input", in_partitions, "arrangement JSON file")
      ->required();
  sub_partitions->add_flag("--dependent-only", dependent_only,
                           "list only dependent partitions");

  std::vector<int> support_flag;
  CLI::App* sub_quadric = app.add_subcommand(
      "quadric", "quadric values over 6-element supports and their pairings");
  sub_quadric->fallthrough();
  sub_quadric->add_option("-i,--input", in_quadric, "arrangement JSON file")->required();
  sub_quadric
      ->add_option("--support", support_flag,
                   "restrict to one support: six 1-based indices")
      ->delimiter(',');

  GenerateOptions gen_opts;
  std::string gen_output;
  CLI::App* sub_generate =
      app.add_subcommand("generate", "construct an arrangement fixture");
  sub_generate->fallthrough();
  sub_generate
      ->add_option("--kind", gen_opts.kind, "dependent, moment, or random")
      ->required()
      ->check(CLI::IsMember({"dependent", "moment", "random"}));
  sub_generate->add_option("--n", gen_opts.n, "number of hyperplanes")
      ->check(positive_int);
  sub_generate->add_option("--k", gen_opts.k, "ambient dimension")
      ->check(positive_int);
  sub_generate->add_option("--seed", gen_opts.seed, "random seed");
  sub_generate->add_option("-o,--output", gen_output, "write the fixture here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sub_check->parsed())
      return cmd_check_generic(load_arrangement_file(in_check), g, out, err);
    if (sub_plucker->parsed())
      return cmd_plucker(load_arrangement_file(in_plucker), g, out, err);
    if (sub_strata->parsed())
      return cmd_strata(load_arrangement_file(in_strata), g, out, err);
    if (sub_partitions->parsed())
      return cmd_partitions(load_arrangement_file(in_partitions), g,
                            dependent_only, out, err);
    if (sub_quadric->parsed())
      return cmd_quadric(load_arrangement_file(in_quadric), g, support_flag, out,
                         err);
    if (sub_generate->parsed())
      return cmd_generate(gen_opts, gen_output, g, out, err);
    err << "usage error: no command given\n";
    return 2;
  } catch (const GenericityError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hyperarr::cli
