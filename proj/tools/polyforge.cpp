// polyforge: construct, validate and dissect string C-groups of 2-power
// order and the regular polytopes they carry.

#include <future>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyforge/cd_construction.hpp"
#include "polyforge/corpus.hpp"
#include "polyforge/coset_enumeration.hpp"
#include "polyforge/errors.hpp"
#include "polyforge/polytope.hpp"
#include "polyforge/presentation.hpp"
#include "polyforge/string_cgroup.hpp"

namespace {

using nlohmann::json;
using namespace polyforge;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
  bool json_output = false;
  int max_cosets = kDefaultMaxCosets;
  std::uint64_t element_cap = kDefaultElementCap;
};

std::string stem_of(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

StringCGroup load_group(const std::string& path, const Options& opt) {
  const Presentation p = parse_presentation(read_file(path));
  const PermutationGroup g = regular_representation(p, opt.max_cosets);
  return StringCGroup::validate(g, g.generators());
}

json report_to_json(const VerificationReport& r) {
  json assertions = json::array();
  for (const Assertion& a : r.assertions)
    assertions.push_back({{"name", a.name},
                          {"expected", a.expected},
                          {"observed", a.observed},
                          {"pass", a.pass}});
  return {{"group", r.group_id},
          {"n", r.n},
          {"d", r.d},
          {"hypothesis_failure", r.hypothesis_failure},
          {"assertions", assertions},
          {"overall", r.overall()}};
}

int cmd_validate(const std::string& file, bool dump, const Options& opt) {
  const StringCGroup s = load_group(file, opt);
  const bool degenerate = !is_nondegenerate(s);
  if (opt.json_output) {
    json out = {{"status", "valid"},
                {"order", s.group().order()},
                {"rank", s.rank()},
                {"schlafli", s.schlafli().entries},
                {"degenerate", degenerate}};
    if (dump) out["group"] = serialize_group(s.group());
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "valid, order " << s.group().order() << ", type "
              << s.schlafli().to_string() << '\n';
    std::cout << "degenerate: " << (degenerate ? "true" : "false") << '\n';
    if (dump) std::cout << serialize_group(s.group());
  }
  return kExitOk;
}

int emit_report(const VerificationReport& r, const Options& opt,
                const std::string& out_file) {
  if (!out_file.empty()) {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw Error("cannot write file: " + out_file);
    out << report_to_keyvalue(r);
  }
  if (opt.json_output)
    std::cout << report_to_json(r).dump(2) << '\n';
  else
    std::cout << report_to_table(r);
  return r.overall() ? kExitOk : kExitVerificationFailure;
}

int cmd_theorem_check_file(const std::string& file, const Options& opt,
                           const std::string& out_file) {
  const StringCGroup s = load_group(file, opt);
  return emit_report(theorem_check(s, stem_of(file)), opt, out_file);
}

int cmd_theorem_check_corpus(const std::string& dir, const Options& opt) {
  const std::vector<CorpusEntry> entries = load_corpus(dir);
  std::vector<std::future<VerificationReport>> futures;
  futures.reserve(entries.size());
  for (const CorpusEntry& e : entries)
    futures.push_back(std::async(std::launch::async, [&e, &dir, &opt]() {
      const StringCGroup s = load_group(dir + "/" + e.file, opt);
      return theorem_check(s, e.id);
    }));

  bool all_pass = true;
  json json_reports = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const VerificationReport r = futures[i].get();
    all_pass = all_pass && r.overall();
    if (opt.json_output)
      json_reports.push_back(report_to_json(r));
    else
      std::cout << report_to_table(r) << '\n';
  }
  if (opt.json_output)
    std::cout << json({{"reports", json_reports}, {"overall", all_pass}}).dump(2)
              << '\n';
  else
    std::cout << "corpus overall: " << (all_pass ? "pass" : "fail") << '\n';
  return all_pass ? kExitOk : kExitVerificationFailure;
}

int cmd_covers(const std::string& file_p, const std::string& file_q,
               bool against_cd, bool allow_degenerate, const Options& opt) {
  const StringCGroup p = load_group(file_p, opt);
  if (!is_nondegenerate(p) && !allow_degenerate)
    throw ValidationError(
        "source group has degenerate type " + p.schlafli().to_string() +
        "; pass --allow-degenerate to probe the projection anyway");
  StringCGroup q = against_cd ? cd_group(p.rank(), opt.max_cosets).group
                              : load_group(file_q, opt);
  const bool result = covers(p, q);
  if (opt.json_output)
    std::cout << json({{"covers", result}}).dump(2) << '\n';
  else
    std::cout << (result ? "true" : "false") << '\n';
  return result ? kExitOk : kExitVerificationFailure;
}

int cmd_polytope(const std::string& file, bool counts, bool diamond, bool dot,
                 const Options& opt) {
  const StringCGroup s = load_group(file, opt);
  const Polytope p = build_polytope(s, opt.element_cap);
  if (counts) {
    const auto fc = face_counts(p);
    if (opt.json_output) {
      std::cout << json({{"counts", fc}}).dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < fc.size(); ++i)
        std::cout << (i ? "," : "") << fc[i];
      std::cout << '\n';
    }
    return kExitOk;
  }
  if (diamond) {
    const bool ok = check_diamond(p);
    if (opt.json_output)
      std::cout << json({{"diamond", ok}}).dump(2) << '\n';
    else
      std::cout << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitVerificationFailure;
  }
  std::cout << export_flag_graph(p);
  return kExitOk;
}

int cmd_cd(int rank, bool emit, const std::string& out_file,
           const Options& opt) {
  if (emit) {
    const std::string text = serialize_presentation(cd_presentation(rank));
    if (out_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_file, std::ios::binary);
      if (!out) throw Error("cannot write file: " + out_file);
      out << text;
    }
    return kExitOk;
  }
  const CdGroup c = cd_group(rank, opt.max_cosets);
  return emit_report(verify_cd_structure(c), opt, "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string C-groups of 2-power order: construction, validation "
               "and structure verification"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json_output, "machine-readable JSON reports");
  app.add_option("--max-cosets", opt.max_cosets,
                 "coset table row limit for enumeration");
  app.add_option("--element-cap", opt.element_cap,
                 "element enumeration limit");

  std::string file_a, file_b, out_file, corpus_dir = "corpus";
  bool dump = false, use_corpus = false, against_cd = false;
  bool allow_degenerate = false, counts = false, diamond = false, dot = false;
  bool emit_pres = false, verify = false;
  int rank = 0;

  CLI::App* validate =
      app.add_subcommand("validate", "validate a presentation file as a "
                                     "string C-group");
  validate->add_option("file", file_a, "presentation file")->required();
  validate->add_flag("--dump", dump, "also print the permutation group");

  CLI::App* theorem = app.add_subcommand(
      "theorem-check", "run the structural verification battery");
  theorem->add_option("file", file_a, "presentation file");
  theorem->add_flag("--corpus", use_corpus, "verify the whole corpus");
  theorem->add_option("--corpus-dir", corpus_dir, "corpus directory")
      ->capture_default_str();
  theorem->add_option("--out", out_file, "write the key-value report here");

  CLI::App* cov = app.add_subcommand(
      "covers", "does the first group project onto the second?");
  cov->add_option("fileP", file_a, "source presentation")->required();
  cov->add_option("fileQ", file_b, "target presentation");
  cov->add_flag("--against-cd", against_cd,
                "target the minimal group of the same rank");
  cov->add_flag("--allow-degenerate", allow_degenerate,
                "probe degenerate sources instead of refusing");

  CLI::App* poly = app.add_subcommand("polytope", "face counts, diamond "
                                                  "check or DOT flag graph");
  poly->add_option("file", file_a, "presentation file")->required();
  poly->add_flag("--counts", counts, "face counts by rank");
  poly->add_flag("--diamond", diamond, "check the diamond property");
  poly->add_flag("--dot", dot, "emit the flag graph in DOT format");

  CLI::App* cd = app.add_subcommand(
      "cd", "emit or verify the minimal 2-power group of a rank");
  cd->add_option("--rank", rank, "rank d >= 2")->required();
  cd->add_flag("--emit-presentation", emit_pres, "write the presentation");
  cd->add_flag("--verify", verify, "verify the structural properties");
  cd->add_option("--out", out_file, "output file for --emit-presentation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file_a, dump, opt);
    if (theorem->parsed()) {
      if (use_corpus) return cmd_theorem_check_corpus(corpus_dir, opt);
      if (file_a.empty())
        throw InvalidArgumentError("theorem-check needs a file or --corpus");
      return cmd_theorem_check_file(file_a, opt, out_file);
    }
    if (cov->parsed()) {
      if (!against_cd && file_b.empty())
        throw InvalidArgumentError("covers needs fileQ or --against-cd");
      return cmd_covers(file_a, file_b, against_cd, allow_degenerate, opt);
    }
    if (poly->parsed()) {
      if (!counts && !diamond && !dot)
        throw InvalidArgumentError(
            "polytope needs one of --counts, --diamond, --dot");
      return cmd_polytope(file_a, counts, diamond, dot, opt);
    }
    if (cd->parsed()) {
      if (emit_pres == verify)
        throw InvalidArgumentError(
            "cd needs exactly one of --emit-presentation, --verify");
      return cmd_cd(rank, emit_pres, out_file, opt);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
