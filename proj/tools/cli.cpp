#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <memory>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pillar/pillar.h"

namespace pillar::cli {

namespace {

struct WordDeleter {
  void operator()(pillar_word* w) const { pillar_word_free(w); }
};
struct MorphismDeleter {
  void operator()(pillar_morphism* f) const { pillar_morphism_free(f); }
};
struct ReportDeleter {
  void operator()(pillar_report* r) const { pillar_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { pillar_string_free(s); }
};
using WordPtr = std::unique_ptr<pillar_word, WordDeleter>;
using MorphismPtr = std::unique_ptr<pillar_morphism, MorphismDeleter>;
using ReportPtr = std::unique_ptr<pillar_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Library failure carrying the status and the thread's last error message.
struct LibraryError {
  pillar_status status;
  std::string message;
};

void check(pillar_status s) {
  if (s != PILLAR_OK) throw LibraryError{s, pillar_last_error()};
}

std::string take(char* s) { return std::string(StringPtr(s).get()); }

struct CommonOptions {
  int genus = 0;
  int strands = 0;
  bool json = false;
  unsigned jobs = 1;
  std::size_t budget = 10'000'000;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool genus_range) {
  if (!genus_range) cmd->add_option("--genus", o.genus, "Surface genus")->check(CLI::PositiveNumber);
  cmd->add_option("--strands", o.strands, "Number of braid strands")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", o.json, "Emit JSON");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", o.budget, "Letter budget for image growth")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for randomized checks");
}

struct GenusRange {
  int lo = 0;
  int hi = 0;
};

std::optional<GenusRange> parse_range(const std::string& text) {
  auto number = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
  };
  auto dots = text.find("..");
  std::string_view view(text);
  auto lo = number(dots == std::string::npos ? view : view.substr(0, dots));
  auto hi = dots == std::string::npos ? lo : number(view.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return GenusRange{*lo, *hi};
}

unsigned check_mask(const std::string& name) {
  if (name == "thm22") return PILLAR_CHECK_FACTORIZATION;
  if (name == "chains") return PILLAR_CHECK_CHAINS;
  if (name == "relations") return PILLAR_CHECK_RELATIONS;
  if (name == "relator") return PILLAR_CHECK_RELATOR;
  if (name == "artin-restriction") return PILLAR_CHECK_ARTIN_RESTRICTION;
  if (name == "yz-roundtrip") return PILLAR_CHECK_YZ_ROUNDTRIP;
  if (name == "inverses") return PILLAR_CHECK_INVERSES;
  return 0;
}

struct GenusOutcome {
  pillar_status status = PILLAR_OK;
  std::string error;
  bool holds = false;
  std::size_t cases = 0;
  std::string text;
  std::string json;
};

int cmd_verify(const std::string& range_text, bool all, const std::vector<std::string>& which,
               const CommonOptions& o, std::ostream& out, std::ostream& err) {
  auto range = parse_range(range_text);
  if (!range || range->lo < 1) {
    err << "error: --genus expects N or A..B with 1 <= A <= B\n";
    return kExitUsage;
  }
  unsigned mask = all ? static_cast<unsigned>(PILLAR_CHECK_ALL) : 0u;
  for (const auto& w : which) {
    unsigned m = check_mask(w);
    if (m == 0) {
      err << "error: unknown check \"" << w << "\"\n";
      return kExitUsage;
    }
    mask |= m;
  }
  if (mask == 0) mask = PILLAR_CHECK_ALL;

  const int count = range->hi - range->lo + 1;
  std::vector<GenusOutcome> outcomes(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < count; k = next++) {
      auto& res = outcomes[static_cast<std::size_t>(k)];
      pillar_report* raw = nullptr;
      res.status = pillar_verify(range->lo + k, mask, o.seed, o.budget, &raw);
      if (res.status != PILLAR_OK) {
        res.error = pillar_last_error();
        continue;
      }
      ReportPtr report(raw);
      res.holds = pillar_report_holds(report.get()) != 0;
      res.cases = pillar_report_case_count(report.get());
      char* s = nullptr;
      if (pillar_report_to_text(report.get(), &s) == PILLAR_OK) res.text = take(s);
      if (pillar_report_to_json(report.get(), &s) == PILLAR_OK) res.json = take(s);
    }
  };
  const unsigned threads = std::min<unsigned>(o.jobs, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (int k = 0; k < count; ++k) {
    const auto& res = outcomes[static_cast<std::size_t>(k)];
    if (res.status == PILLAR_OK) continue;
    err << "error: genus " << range->lo + k << ": " << res.error << '\n';
    return res.status == PILLAR_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailed;
  }

  bool all_hold = true;
  for (const auto& res : outcomes) all_hold = all_hold && res.holds;

  if (o.json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& res : outcomes) doc.push_back(nlohmann::json::parse(res.json));
    out << doc.dump(2) << '\n';
  } else {
    for (int k = 0; k < count; ++k) {
      const auto& res = outcomes[static_cast<std::size_t>(k)];
      out << "genus " << range->lo + k << ": " << (res.holds ? "PASS" : "FAIL") << " ("
          << res.cases << " checks)\n"
          << res.text;
    }
    out << (all_hold ? "all checks hold\n" : "some checks FAILED\n");
  }
  return all_hold ? kExitOk : kExitFailed;
}

// Builds the endomorphism named by (object, spec) over XY(genus).
MorphismPtr build_object(const std::string& object, const std::string& spec, int genus,
                         const CommonOptions& o) {
  pillar_morphism* raw = nullptr;
  if (object == "twist-word") {
    check(pillar_twist_word_action(genus, spec.c_str(), o.budget, &raw));
  } else if (object == "sigma") {
    int index = 0;
    auto [p, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), index);
    if (ec != std::errc() || p != spec.data() + spec.size())
      throw LibraryError{PILLAR_ERR_PARSE, "sigma index must be an integer, got \"" + spec + "\""};
    check(pillar_sigma_action(index, genus, &raw));
  } else if (object == "braid-psi") {
    if (o.strands != 0 && o.strands != genus)
      throw LibraryError{PILLAR_ERR_INVALID_ARGUMENT, "braid-psi needs --strands equal to --genus"};
    check(pillar_braid_psi_action(genus, spec.c_str(), o.budget, &raw));
  } else {
    throw LibraryError{PILLAR_ERR_INVALID_ARGUMENT,
                       "unknown object \"" + object + "\" (twist-word, sigma, braid-psi)"};
  }
  return MorphismPtr(raw);
}

int report_library_error(const LibraryError& e, std::ostream& err) {
  err << "error: " << e.message << '\n';
  // Bad input of any kind is a usage error; only resource exhaustion is not.
  return e.status == PILLAR_ERR_BUDGET || e.status == PILLAR_ERR_INTERNAL ? kExitFailed
                                                                          : kExitUsage;
}

int cmd_act(const std::string& object, const std::string& spec, const std::string& target,
            const CommonOptions& o, std::ostream& out, std::ostream& err) {
  try {
    MorphismPtr f = build_object(object, spec, o.genus, o);
    pillar_word* raw = nullptr;
    check(pillar_word_parse(PILLAR_BASIS_XY, o.genus, target.c_str(), &raw));
    WordPtr w(raw);
    check(pillar_morphism_apply(f.get(), w.get(), o.budget, &raw));
    WordPtr image(raw);
    char* s = nullptr;
    check(pillar_word_format(image.get(), &s));
    std::string text = take(s);
    if (o.json)
      out << nlohmann::json{{"image", text}}.dump() << '\n';
    else
      out << text << '\n';
    return kExitOk;
  } catch (const LibraryError& e) {
    return report_library_error(e, err);
  }
}

int cmd_braid_trivial(const std::string& word, const CommonOptions& o, std::ostream& out,
                      std::ostream& err) {
  try {
    int trivial = 0;
    check(pillar_braid_is_trivial(o.strands, word.c_str(), o.budget, &trivial));
    if (o.json)
      out << nlohmann::json{{"trivial", trivial != 0}}.dump() << '\n';
    else
      out << (trivial ? "trivial" : "nontrivial") << '\n';
    return trivial ? kExitOk : kExitFailed;
  } catch (const LibraryError& e) {
    return report_library_error(e, err);
  }
}

int cmd_export(const std::string& object, const std::string& spec, const CommonOptions& o,
               std::ostream& out, std::ostream& err) {
  try {
    MorphismPtr f = build_object(object, spec, o.genus, o);
    char* s = nullptr;
    check(pillar_morphism_to_json(f.get(), &s));
    std::string json = take(s);
    if (o.json) {
      out << json << '\n';
    } else {
      auto doc = nlohmann::json::parse(json);
      for (const auto& [name, image] : doc["images"].items())
        out << name << " -> " << image.get<std::string>() << '\n';
    }
    return kExitOk;
  } catch (const LibraryError& e) {
    return report_library_error(e, err);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic verification of pillar switchings, Dehn twists and braids"};
  app.name("pillar");
  app.require_subcommand(1);

  CommonOptions opts;

  auto* verify = app.add_subcommand("verify", "Run verification suites over a genus range");
  std::string range_text;
  bool all = false;
  std::vector<std::string> which;
  verify->add_option("--genus", range_text, "Genus N or range A..B")->required();
  verify->add_flag("--all", all, "Run every check");
  verify->add_option("--which", which,
                     "Checks: thm22, chains, relations, relator, artin-restriction, "
                     "yz-roundtrip, inverses")
      ->delimiter(',');
  add_common(verify, opts, true);

  auto* act = app.add_subcommand("act", "Apply a mapping class to a word");
  std::string object, spec, target;
  act->add_option("object", object, "twist-word | sigma | braid-psi")->required();
  act->add_option("spec", spec, "Twist word, sigma index or braid word")->required();
  act->add_option("--on", target, "Word in x/y generators")->required();
  add_common(act, opts, false);
  act->get_option("--genus")->required();

  auto* trivial = app.add_subcommand("braid-trivial", "Decide whether a braid word is trivial");
  std::string braid;
  trivial->add_option("word", braid, "Braid word, e.g. \"b1 b2 b1^-1\"")->required();
  add_common(trivial, opts, false);
  trivial->get_option("--strands")->required();

  auto* exp = app.add_subcommand("export", "Print the generator images of a mapping class");
  exp->add_option("object", object, "twist-word | sigma | braid-psi")->required();
  exp->add_option("spec", spec, "Twist word, sigma index or braid word")->required();
  add_common(exp, opts, false);
  exp->get_option("--genus")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (verify->parsed()) return cmd_verify(range_text, all, which, opts, out, err);
  if (act->parsed()) return cmd_act(object, spec, target, opts, out, err);
  if (trivial->parsed()) return cmd_braid_trivial(braid, opts, out, err);
  return cmd_export(object, spec, opts, out, err);
}

}  // namespace pillar::cli
