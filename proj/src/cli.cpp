#include "anderson/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "anderson/literals.hpp"
#include "anderson/report.hpp"

namespace anderson {

namespace {

struct Execution {
  nlohmann::json report;
  std::string outcome;
  bool refuted = false;
};

struct UsageError : ParseError {
  using ParseError::ParseError;
};

long long parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": '" + text + "'");
  }
  if (pos != text.size() || value < 0)
    throw UsageError("bad " + what + ": '" + text + "'");
  return value;
}

long long cap_from_env() {
  const char* raw = std::getenv("ANDERSON_CAP");
  if (raw == nullptr) return kDefaultCap;
  long long cap = parse_count(raw, "ANDERSON_CAP value");
  if (cap <= 0) throw UsageError("ANDERSON_CAP must be positive");
  return cap;
}

/// Positional arguments plus --flag value pairs.
struct ParsedArgs {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;
};

ParsedArgs parse_args(const std::vector<std::string>& args, std::size_t from) {
  ParsedArgs parsed;
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg.rfind("--", 0) == 0) {
      if (i + 1 >= args.size())
        throw UsageError("flag " + arg + " needs a value");
      parsed.flags[arg.substr(2)] = args[++i];
    } else {
      parsed.positional.push_back(arg);
    }
  }
  return parsed;
}

long long flag_count(const ParsedArgs& parsed, const std::string& name,
                     long long fallback) {
  auto it = parsed.flags.find(name);
  if (it == parsed.flags.end()) return fallback;
  return parse_count(it->second, "--" + name);
}

void require_flags_in(const ParsedArgs& parsed,
                      const std::vector<std::string>& allowed) {
  for (const auto& [name, value] : parsed.flags) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == name;
    if (!ok) throw UsageError("unknown flag --" + name);
  }
}

std::string aggregate_outcome(const std::vector<TheoremVerdict>& verdicts) {
  bool refuted = false;
  std::optional<int> bound;
  bool bounded = false;
  for (const auto& v : verdicts) {
    ClaimStatus s = v.overall();
    if (s == ClaimStatus::Refuted) refuted = true;
    if (s == ClaimStatus::BoundedConsistent) {
      bounded = true;
      auto b = v.overall_bound();
      if (b && (!bound || *b > *bound)) bound = *b;
    }
  }
  if (refuted) return "refuted";
  if (bounded) return claim_status_string(ClaimStatus::BoundedConsistent, bound);
  return "verified";
}

Execution exec_spectrum(const RingSpec& ring, int samples, std::uint64_t seed,
                        long long cap) {
  SpectrumReport report = maximal_spectrum(ring, samples, seed, cap);
  bool ok = report.tops_pairwise_incomparable &&
            report.bottoms_pairwise_incomparable;
  for (bool proper : report.tops_proper) ok = ok && proper;
  for (const auto& witnesses : report.top_maximality)
    for (const auto& w : witnesses) ok = ok && w.verified;
  for (const auto& chain : report.chains) ok = ok && chain.strict();
  Execution exec;
  exec.report = report;
  exec.outcome = ok ? "maximal=" + std::to_string(report.tops.size())
                    : "refuted";
  exec.refuted = !ok;
  return exec;
}

Execution exec_check(const RingSpec& ring, const std::string& predicate,
                     long long cap) {
  RingPredicates preds = predicates(ring, cap);
  bool value = false;
  if (predicate == "vnr") {
    value = preds.is_vnr;
  } else if (predicate == "reduced") {
    value = preds.is_reduced;
  } else if (predicate == "pir") {
    value = preds.is_pir;
  } else if (predicate == "local") {
    value = preds.is_local;
  } else if (predicate == "field") {
    value = preds.is_field;
  } else {
    throw UsageError("unknown predicate '" + predicate + "'");
  }
  Execution exec;
  exec.report = nlohmann::json{{"predicate", predicate},
                               {"predicates", preds},
                               {"ring", ring},
                               {"value", value}};
  exec.outcome = value ? "true" : "false";
  return exec;
}

Execution exec_member(const std::string& fraction_text,
                      const std::string& ideal_text, int degree,
                      long long cap) {
  LocElem x = parse_fraction(fraction_text);
  require_within_cap(x.ring(), cap);
  MembershipPolicy policy{degree, degree};
  LocIdeal ideal = parse_ideal_spec(x.ring(), ideal_text, policy);
  MembershipResult result = membership(x, ideal);
  Execution exec;
  exec.report = nlohmann::json{{"fraction", x},
                               {"ideal", ideal},
                               {"result", result},
                               {"ring", x.ring()}};
  switch (result.status) {
    case MembershipStatus::Member:
      exec.outcome = "member";
      break;
    case MembershipStatus::NotMember:
      exec.outcome = "not-member";
      break;
    case MembershipStatus::NotFoundUpTo:
      exec.outcome =
          "not-found-up-to(" + std::to_string(result.bound.value_or(degree)) +
          ")";
      break;
  }
  return exec;
}

Execution exec_gen_search(const RingSpec& ring, const std::string& ideal_text,
                          int degree, long long cap) {
  require_within_cap(ring, cap);
  LocIdeal ideal = parse_ideal_spec(ring, ideal_text);
  if (ideal.shape() != LocIdeal::Shape::IPlusX)
    throw UsageError("gen-search needs an ideal spec of the form (...)+X");
  GeneratorSearchResult result = generator_search(ideal, degree);
  Execution exec;
  exec.report = nlohmann::json{{"ideal", ideal},
                               {"ring", ring},
                               {"search", result}};
  exec.outcome =
      result.certificate
          ? "generator(" + format_poly(result.certificate->generator) + ")"
          : "not-found-up-to(" + std::to_string(degree) + ")";
  return exec;
}

IdealOfR base_ideal_arg(const RingSpec& ring, const std::string& text) {
  LocIdeal parsed = parse_ideal_spec(ring, text);
  if (parsed.shape() != LocIdeal::Shape::ExtensionOfR)
    throw UsageError("--ideal expects a base-ring ideal spec like (2)");
  return parsed.base_ideal();
}

Execution exec_theorem(const std::string& id, const RingSpec& ring,
                       const ParsedArgs& parsed, long long cap) {
  require_within_cap(ring, cap);
  const int degree = static_cast<int>(flag_count(parsed, "degree", 3));
  const int trials = static_cast<int>(flag_count(parsed, "trials", 200));
  const std::uint64_t seed =
      static_cast<std::uint64_t>(flag_count(parsed, "seed", 1));
  Execution exec;

  if (id == "pir2") {
    TheoremVerdict verdict = check_pir2(ring, degree);
    exec.report = verdict;
    exec.outcome = verdict.outcome();
    exec.refuted = verdict.overall() == ClaimStatus::Refuted;
    return exec;
  }
  if (id == "vnr-prufer") {
    TheoremVerdict verdict = check_vnr_prufer(ring);
    exec.report = verdict;
    exec.outcome = verdict.outcome();
    exec.refuted = verdict.overall() == ClaimStatus::Refuted;
    return exec;
  }
  if (id == "gaussian") {
    GaussianOptions options;
    options.trials = trials;
    options.seed = seed;
    GaussianResult result = check_gaussian(ring, options);
    exec.report = result;
    exec.outcome = result.verdict.outcome();
    exec.refuted = result.verdict.overall() == ClaimStatus::Refuted;
    return exec;
  }
  if (id == "contraction" || id == "generator-count" ||
      id == "locally-principal") {
    std::vector<IdealOfR> ideals;
    auto it = parsed.flags.find("ideal");
    if (it != parsed.flags.end()) {
      ideals.push_back(base_ideal_arg(ring, it->second));
    } else {
      for (const auto& entry : ideal_lattice(ring, cap))
        ideals.push_back(entry.ideal);
    }
    std::vector<TheoremVerdict> verdicts;
    for (const auto& ideal : ideals) {
      if (id == "contraction") {
        verdicts.push_back(check_contraction(ideal));
      } else if (id == "generator-count") {
        verdicts.push_back(check_generator_count(ideal, degree));
      } else {
        verdicts.push_back(check_locally_principal(ideal));
      }
    }
    exec.report = nlohmann::json{{"ring", ring},
                                 {"theorem", id},
                                 {"verdicts", verdicts}};
    exec.outcome = aggregate_outcome(verdicts);
    exec.refuted = exec.outcome == "refuted";
    return exec;
  }
  throw UsageError("unknown theorem id '" + id + "'");
}

Execution run_single(const std::vector<std::string>& args, long long cap);

Execution exec_scenarios(const std::string& path, long long cap) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open scenario file '" + path + "'");

  struct Row {
    std::string name;
    std::vector<std::string> argv;
    std::string expected;
    int line;
  };
  std::vector<Row> rows;
  std::string line;
  int line_number = 0;
  std::vector<std::string> seen_names;
  while (std::getline(in, line)) {
    ++line_number;
    std::string trimmed = line;
    const auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto bar = line.find('|', start);
      std::string field = line.substr(
          start, bar == std::string::npos ? std::string::npos : bar - start);
      const auto b = field.find_first_not_of(" \t\r");
      const auto e = field.find_last_not_of(" \t\r");
      fields.push_back(b == std::string::npos
                           ? std::string()
                           : field.substr(b, e - b + 1));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (fields.size() < 3 || fields.size() > 5)
      throw ParseError("scenario line needs name|ring|command|params[|expected]",
                       line_number);
    fields.resize(5);
    Row row;
    row.name = fields[0];
    row.expected = fields[4];
    row.line = line_number;
    if (row.name.empty()) throw ParseError("empty scenario name", line_number);
    for (const auto& n : seen_names)
      if (n == row.name)
        throw ParseError("duplicate scenario name '" + row.name + "'",
                         line_number);
    seen_names.push_back(row.name);

    // Command word(s), then the ring where the command expects one, then
    // params as key=value pairs.
    std::vector<std::string> words;
    {
      std::stringstream cs(fields[2]);
      std::string w;
      while (cs >> w) words.push_back(w);
    }
    if (words.empty()) throw ParseError("empty scenario command", line_number);
    const std::string& cmd = words[0];
    std::map<std::string, std::string> params;
    {
      std::stringstream ps(fields[3]);
      std::string token;
      while (ps >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
          throw ParseError("scenario param '" + token + "' is not key=value",
                           line_number);
        params[token.substr(0, eq)] = token.substr(eq + 1);
      }
    }
    auto take = [&](const std::string& key) -> std::optional<std::string> {
      auto it = params.find(key);
      if (it == params.end()) return std::nullopt;
      std::string value = it->second;
      params.erase(it);
      return value;
    };
    auto flag_through = [&](const std::string& key) {
      if (auto v = take(key)) {
        row.argv.push_back("--" + key);
        row.argv.push_back(*v);
      }
    };

    if (cmd == "spectrum" && words.size() == 1) {
      row.argv = {"spectrum", fields[1]};
      flag_through("samples");
      flag_through("seed");
    } else if (cmd == "check" && words.size() == 2) {
      row.argv = {"check", fields[1], words[1]};
    } else if (cmd == "member" && words.size() == 1) {
      auto fraction = take("fraction");
      auto ideal = take("ideal");
      if (!fraction || !ideal)
        throw ParseError("member scenario needs fraction= and ideal=",
                         line_number);
      try {
        if (parse_fraction(*fraction).ring() != parse_ring(fields[1]))
          throw ParseError("scenario ring does not match the fraction ring",
                           line_number);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_number);
      }
      row.argv = {"member", *fraction, *ideal};
      flag_through("degree");
    } else if (cmd == "gen-search" && words.size() == 1) {
      auto ideal = take("ideal");
      if (!ideal)
        throw ParseError("gen-search scenario needs ideal=", line_number);
      row.argv = {"gen-search", fields[1], *ideal};
      flag_through("degree");
    } else if (cmd == "theorem" && words.size() == 2) {
      row.argv = {"theorem", words[1], fields[1]};
      flag_through("degree");
      flag_through("trials");
      flag_through("seed");
      flag_through("ideal");
    } else {
      throw ParseError("unknown scenario command '" + fields[2] + "'",
                       line_number);
    }
    if (!params.empty())
      throw ParseError("unused scenario param '" + params.begin()->first + "'",
                       line_number);
    rows.push_back(std::move(row));
  }

  nlohmann::json results = nlohmann::json::array();
  int passed = 0;
  int failed = 0;
  for (const auto& row : rows) {
    nlohmann::json entry{{"name", row.name}};
    std::string outcome;
    try {
      Execution sub = run_single(row.argv, cap);
      outcome = sub.outcome;
      if (row.expected.empty()) {
        entry["pass"] = !sub.refuted;
      } else {
        entry["pass"] = outcome == row.expected;
      }
      if (!entry["pass"].get<bool>()) entry["report"] = sub.report;
    } catch (const CapExceededError&) {
      outcome = "cap-exceeded";
      entry["pass"] = row.expected == outcome;
    } catch (const UsageError& e) {
      throw ParseError(std::string(e.what()), row.line);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), row.line);
    }
    entry["outcome"] = outcome;
    if (!row.expected.empty()) entry["expected"] = row.expected;
    if (entry["pass"].get<bool>()) {
      ++passed;
    } else {
      ++failed;
    }
    results.push_back(std::move(entry));
  }

  Execution exec;
  exec.report = nlohmann::json{{"failed", failed},
                               {"passed", passed},
                               {"scenarios", results},
                               {"total", passed + failed}};
  exec.outcome = "passed=" + std::to_string(passed) + "/" +
                 std::to_string(passed + failed);
  exec.refuted = failed > 0;
  return exec;
}

Execution run_single(const std::vector<std::string>& args, long long cap) {
  if (args.empty())
    throw UsageError(
        "usage: anderson <spectrum|check|member|gen-search|theorem|scenarios> "
        "...");
  const std::string& cmd = args[0];
  ParsedArgs parsed = parse_args(args, 1);

  if (cmd == "spectrum") {
    require_flags_in(parsed, {"samples", "seed"});
    if (parsed.positional.size() != 1)
      throw UsageError("usage: anderson spectrum <ring> [--samples k --seed s]");
    RingSpec ring = parse_ring(parsed.positional[0]);
    require_within_cap(ring, cap);
    return exec_spectrum(ring,
                         static_cast<int>(flag_count(parsed, "samples", 8)),
                         static_cast<std::uint64_t>(flag_count(parsed, "seed", 1)),
                         cap);
  }
  if (cmd == "check") {
    require_flags_in(parsed, {});
    if (parsed.positional.size() != 2)
      throw UsageError(
          "usage: anderson check <ring> <vnr|reduced|pir|local|field>");
    RingSpec ring = parse_ring(parsed.positional[0]);
    require_within_cap(ring, cap);
    return exec_check(ring, parsed.positional[1], cap);
  }
  if (cmd == "member") {
    require_flags_in(parsed, {"degree"});
    if (parsed.positional.size() != 2)
      throw UsageError(
          "usage: anderson member <fraction> <ideal-spec> [--degree d]");
    return exec_member(parsed.positional[0], parsed.positional[1],
                       static_cast<int>(flag_count(parsed, "degree", 3)), cap);
  }
  if (cmd == "gen-search") {
    require_flags_in(parsed, {"degree"});
    if (parsed.positional.size() != 2)
      throw UsageError(
          "usage: anderson gen-search <ring> <ideal-spec> --degree d");
    RingSpec ring = parse_ring(parsed.positional[0]);
    return exec_gen_search(ring, parsed.positional[1],
                           static_cast<int>(flag_count(parsed, "degree", 3)),
                           cap);
  }
  if (cmd == "theorem") {
    require_flags_in(parsed, {"degree", "trials", "seed", "ideal"});
    if (parsed.positional.size() != 2)
      throw UsageError(
          "usage: anderson theorem <id> <ring> [--degree d --trials t --seed "
          "s --ideal spec]");
    RingSpec ring = parse_ring(parsed.positional[1]);
    return exec_theorem(parsed.positional[0], ring, parsed, cap);
  }
  if (cmd == "scenarios") {
    require_flags_in(parsed, {});
    if (parsed.positional.size() != 1)
      throw UsageError("usage: anderson scenarios <file>");
    return exec_scenarios(parsed.positional[0], cap);
  }
  throw UsageError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out) {
  try {
    const long long cap = cap_from_env();
    Execution exec = run_single(args, cap);
    nlohmann::json doc{{"command", args.empty() ? "" : args[0]},
                       {"outcome", exec.outcome},
                       {"report", exec.report}};
    out << render_json(doc);
    return exec.refuted ? 1 : 0;
  } catch (const CapExceededError& e) {
    out << render_json(nlohmann::json{{"error", e.what()}});
    return 3;
  } catch (const ParseError& e) {
    nlohmann::json err{{"error", e.what()}};
    if (e.line_number >= 0) err["line"] = e.line_number;
    out << render_json(err);
    return 2;
  } catch (const std::domain_error& e) {
    out << render_json(nlohmann::json{{"error", e.what()}});
    return 2;
  } catch (const std::invalid_argument& e) {
    out << render_json(nlohmann::json{{"error", e.what()}});
    return 2;
  }
}

}  // namespace anderson
