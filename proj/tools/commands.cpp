#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "apolar/apolarity.hpp"
#include "apolar/blocks.hpp"
#include "apolar/errors.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/rank.hpp"
#include "apolar/verifier.hpp"
#include "json.hpp"

namespace apolar::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t max_monomials = kDefaultMaxMonomials;
  std::size_t samples = 3;
};

struct Outcome {
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::string text;
  int code = kOk;
};

std::string num(std::size_t v) { return std::to_string(v); }

Json linear_json(const LinearForm& l, const Ring& ring) {
  Json coeffs = Json::array();
  for (const auto& c : l.coefficients) coeffs.push_back(to_string(c));
  return Json{{"coefficients", coeffs}, {"text", l.to_string(ring)}};
}

Json names_json(const Ring& ring) {
  Json out = Json::array();
  for (const auto& n : ring.names()) out.push_back(n);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-empty lines of a file with `#` comments removed.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> polynomial_inputs(const std::string& text, const std::string& file) {
  if (!text.empty() && !file.empty()) throw InvalidArgument("give a polynomial or --file, not both");
  if (!file.empty()) return content_lines(read_file(file));
  if (text.empty()) throw InvalidArgument("a polynomial is required");
  return {text};
}

Polynomial parse_form(const std::string& text) {
  Polynomial F = parse_poly(text);
  if (!F.degree()) throw InvalidArgument("the polynomial is not homogeneous");
  return F;
}

// Runs `one` on every input polynomial; a single input is reported directly,
// several (from a file) as a "results" array.
Outcome for_each_polynomial(const std::vector<std::string>& inputs,
                            const std::function<Outcome(const std::string&)>& one) {
  if (inputs.size() == 1) return one(inputs.front());
  Outcome all;
  all.inputs["polynomials"] = Json::array();
  all.outputs["results"] = Json::array();
  for (const auto& text : inputs) {
    Outcome o = one(text);
    all.inputs["polynomials"].push_back(o.inputs);
    all.outputs["results"].push_back(o.outputs);
    all.text += o.text + "\n";
    all.code = std::max(all.code, o.code);
  }
  return all;
}

// ------------------------------------------------------------------ perp

Outcome perp_one(const std::string& text) {
  Outcome o;
  const Polynomial F = parse_form(text);
  const unsigned d = *F.degree();
  o.inputs = {{"polynomial", F.to_string()}, {"variables", names_json(F.ring())}};
  const GradedIdeal perp = perp_graded(F);
  const HilbertFunction h = hilbert_function(perp);
  Json hj = Json::array(), pj = Json::array();
  std::ostringstream t;
  t << "F = " << F.to_string() << "\n";
  t << std::left << std::setw(8) << "degree" << std::setw(10) << "dim T_e" << std::setw(14)
    << "dim F^perp_e" << "H(e)\n";
  for (unsigned e = 0; e <= d; ++e) {
    const std::size_t full = monomial_count(F.ring().size(), e);
    hj.push_back(num(h.values[e]));
    pj.push_back(num(full - h.values[e]));
    t << std::setw(8) << e << std::setw(10) << full << std::setw(14) << full - h.values[e]
      << h.values[e] << "\n";
  }
  t << "length of T/F^perp: " << h.total();
  o.outputs = {{"degree", num(d)}, {"hilbert", hj}, {"perp_dims", pj}, {"length", num(h.total())}};
  o.text = t.str();
  return o;
}

// ------------------------------------------------------------------ rank

Outcome rank_one(const std::string& text, const std::string& witness_text) {
  Outcome o;
  const Polynomial F = parse_form(text);
  const Ring& ring = F.ring();
  o.inputs = {{"polynomial", F.to_string()}, {"variables", names_json(ring)}};
  const FormRank fr = waring_rank(F);
  std::ostringstream t;
  t << "F = " << F.to_string() << "\n";
  t << "class: " << to_string(fr.form_class) << "\n";
  o.outputs["class"] = to_string(fr.form_class);
  o.outputs["rank"] = fr.value ? Json(num(*fr.value)) : Json(nullptr);
  if (fr.value) t << "rank: " << *fr.value << "\n";

  std::optional<LinearForm> witness = fr.witness;
  if (!witness_text.empty()) {
    witness = parse_linear_form(witness_text, ring);
    o.inputs["witness"] = witness->to_string(ring);
  }
  if (witness) {
    const std::size_t bound = rank_lower_bound(F, *witness);
    o.outputs["witness"] = linear_json(*witness, ring);
    o.outputs["lower_bound"] = num(bound);
    t << "witness: " << witness->to_string(ring) << "\n";
    t << "lower bound dim T/((F^perp:t)+(t)): " << bound;
  } else if (fr.form_class == FormClass::other) {
    // Best bound over the coordinate linear forms.
    std::size_t best = 0;
    LinearForm best_form = LinearForm::variable(ring.size(), 0);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const LinearForm l = LinearForm::variable(ring.size(), i);
      const std::size_t b = rank_lower_bound(F, l);
      if (b > best) {
        best = b;
        best_form = l;
      }
    }
    o.outputs["witness"] = linear_json(best_form, ring);
    o.outputs["lower_bound"] = num(best);
    t << "lower bound only (no closed form): " << best << " with " << best_form.to_string(ring);
  } else {
    o.outputs["witness"] = nullptr;
    o.outputs["witness_error"] = fr.note;
    t << "witness: none with rational coefficients (" << fr.note << ")";
    o.code = kComputationFailed;
  }
  if (fr.form_class == FormClass::other) o.outputs["note"] = fr.note;
  o.text = t.str();
  return o;
}

// ----------------------------------------------------------------- crank

Outcome crank_one(const std::string& text, const Globals& g) {
  Outcome o;
  const Polynomial F = parse_form(text);
  const Ring& ring = F.ring();
  o.inputs = {{"polynomial", F.to_string()}, {"variables", names_json(ring)},
              {"samples", num(g.samples)}};
  const FormRank fr = cactus_rank(F);
  const CrankBound cb = crank_lower_bound(F, g.samples, g.seed);
  std::ostringstream t;
  t << "F = " << F.to_string() << "\n";
  t << "class: " << to_string(fr.form_class) << "\n";
  o.outputs["class"] = to_string(fr.form_class);
  o.outputs["crank"] = fr.value ? Json(num(*fr.value)) : Json(nullptr);
  if (fr.value) t << "cactus rank: " << *fr.value << "\n";
  if (!fr.note.empty()) {
    o.outputs["note"] = fr.note;
    t << "note: " << fr.note << "\n";
  }
  Json samples = Json::array();
  for (std::size_t i = 0; i < cb.forms.size(); ++i)
    samples.push_back({{"form", linear_json(cb.forms[i], ring)}, {"value", num(cb.values[i])}});
  o.outputs["crank_lower_bound"] = num(cb.value);
  o.outputs["samples_agreed"] = cb.samples_agreed;
  o.outputs["samples"] = samples;
  t << "general-form value dim T/(F^perp+(l)): " << cb.value
    << (cb.samples_agreed ? "" : " (samples disagreed; minimum reported)");
  o.text = t.str();
  return o;
}

// ----------------------------------------------------------------- bound

Outcome bound_one(const std::string& text, const std::string& form_text, bool cactus) {
  Outcome o;
  const Polynomial F = parse_form(text);
  const Ring& ring = F.ring();
  const LinearForm l = parse_linear_form(form_text, ring);
  o.inputs = {{"polynomial", F.to_string()},
              {"variables", names_json(ring)},
              {"form", l.to_string(ring)},
              {"cactus", cactus}};
  const std::size_t value = cactus ? crank_of_sample(F, l) : rank_lower_bound(F, l);
  o.outputs = {{"form", linear_json(l, ring)}, {"bound", num(value)}};
  o.text = (cactus ? std::string("dim T/(F^perp+(l)) = ")
                   : std::string("dim T/((F^perp:t)+(t)) = ")) +
           std::to_string(value);
  return o;
}

// -------------------------------------------------------------- additive

Json certificate_json(const RankCertificate& c, const Ring& ring) {
  Json w = Json::array();
  for (const auto& l : c.witnesses) w.push_back(linear_json(l, ring));
  Json values = Json::array(), classes = Json::array(), partial = Json::array(),
       notes = Json::array();
  for (auto v : c.block_values) values.push_back(num(v));
  for (auto k : c.block_classes) classes.push_back(to_string(k));
  for (auto v : c.partial_sums) partial.push_back(num(v));
  for (const auto& n : c.notes) notes.push_back(n);
  Json j{{"kind", to_string(c.kind)},
         {"value", num(c.value)},
         {"verdict", to_string(c.verdict)},
         {"upper_bound", num(c.upper_bound)},
         {"lower_bound", num(c.lower_bound)},
         {"lower_bound_method", c.lower_bound_method},
         {"block_values", values},
         {"block_classes", classes},
         {"witnesses", w}};
  if (c.kind == RankKind::waring) {
    j["sum_witness_bound"] = c.sum_witness_bound ? Json(num(*c.sum_witness_bound)) : Json(nullptr);
  } else {
    j["partial_sums"] = partial;
    j["samples_agreed"] = c.samples_agreed;
  }
  j["notes"] = notes;
  return j;
}

std::string certificate_text(const RankCertificate& c, const Ring& ring) {
  std::ostringstream t;
  t << (c.kind == RankKind::waring ? "rank" : "cactus rank") << ": " << c.value << " ("
    << to_string(c.verdict) << ")\n";
  t << "upper bound (sum over blocks): " << c.upper_bound << "\n";
  t << "lower bound: " << c.lower_bound << " [" << c.lower_bound_method << "]\n";
  t << "blocks:";
  for (std::size_t i = 0; i < c.block_values.size(); ++i)
    t << " " << to_string(c.block_classes[i]) << "=" << c.block_values[i];
  t << "\n" << (c.kind == RankKind::waring ? "witnesses:" : "sampled forms:");
  for (const auto& l : c.witnesses) t << " [" << l.to_string(ring) << "]";
  if (c.sum_witness_bound) t << "\nbound with the summed witness: " << *c.sum_witness_bound;
  if (!c.partial_sums.empty()) {
    t << "\npartial sums:";
    for (auto v : c.partial_sums) t << " " << v;
  }
  for (const auto& n : c.notes) t << "\nnote: " << n;
  return t.str();
}

Outcome additive_cmd(const std::string& blocks, const std::string& file, bool cactus,
                     const Globals& g) {
  if (blocks.empty() == file.empty()) throw InvalidArgument("give exactly one of --blocks or --file");
  const BlockDecomposition bd =
      blocks.empty() ? parse_blocks(content_lines(read_file(file))) : parse_blocks(blocks);
  const auto problems = block_violations(bd);
  if (!problems.empty()) {
    std::string msg = "invalid blocks:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InvalidArgument(msg);
  }
  Outcome o;
  o.inputs = {{"blocks", to_string(bd)}, {"cactus", cactus}};
  if (cactus) o.inputs["samples"] = num(g.samples);
  const RankCertificate cert = cactus ? additive_crank(bd, g.samples, g.seed) : additive_rank(bd);
  o.outputs["certificate"] = certificate_json(cert, bd.ambient);
  o.text = "F = " + bd.total().to_string() + "\n" + certificate_text(cert, bd.ambient);
  if (cert.verdict != Verdict::certified_equal) o.code = kCheckFailed;
  return o;
}

// ---------------------------------------------------------------- verify

Json report_json(const CheckReport& r) {
  Json obs = Json::object(), exp = Json::object();
  for (const auto& [k, v] : r.observed) obs[k] = v;
  for (const auto& [k, v] : r.expected) exp[k] = v;
  return Json{{"check", r.check_name}, {"instance", r.instance}, {"passed", r.passed},
              {"skipped", r.skipped},  {"observed", obs},        {"expected", exp},
              {"detail", r.detail}};
}

Outcome verify_cmd(const std::vector<std::string>& suites, std::size_t count, const Globals& g) {
  CorpusConfig config;
  config.suites = suites;
  config.count = count;
  config.seed = g.seed;
  config.samples = g.samples;
  Outcome o;
  Json sj = Json::array();
  for (const auto& s : suites) sj.push_back(s);
  o.inputs = {{"suites", sj}, {"count", num(count)}, {"samples", num(g.samples)}};
  const auto reports = run_corpus(config);

  struct Tally {
    std::size_t passed = 0, failed = 0, skipped = 0;
  };
  std::map<std::string, Tally> tally;
  Json rj = Json::array();
  std::ostringstream t;
  for (const auto& r : reports) {
    auto& c = tally[r.check_name];
    if (r.skipped) {
      ++c.skipped;
    } else if (r.passed) {
      ++c.passed;
    } else {
      ++c.failed;
      o.code = kCheckFailed;
      t << "FAIL " << r.check_name << ": " << r.instance;
      if (!r.detail.empty()) t << " (" << r.detail << ")";
      for (std::size_t i = 0; i < r.observed.size(); ++i)
        t << "\n  observed " << r.observed[i].first << " = " << r.observed[i].second;
      for (const auto& [k, v] : r.expected) t << "\n  expected " << k << " = " << v;
      t << "\n";
    }
    rj.push_back(report_json(r));
  }
  Json summary = Json::object();
  for (const auto& [name, c] : tally) {
    summary[name] = {{"passed", num(c.passed)}, {"failed", num(c.failed)},
                     {"skipped", num(c.skipped)}};
    t << std::left << std::setw(18) << name << " passed " << c.passed << ", failed " << c.failed
      << ", skipped " << c.skipped << "\n";
  }
  t << (reports.empty() ? "no checks run" : (o.code == kOk ? "all checks passed" : "FAILURES"));
  o.outputs = {{"summary", summary}, {"reports", rj}};
  o.text = t.str();
  return o;
}

std::string error_kind(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::syntax: return "syntax";
    case ParseError::Kind::unknown_variable: return "unknown_variable";
    case ParseError::Kind::zero_polynomial: return "zero_polynomial";
  }
  return "syntax";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact apolarity computations: perp ideals, Waring and cactus ranks"};
  app.name("apolar");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON report");
  app.add_option("--seed", g.seed, "Seed for sampled linear forms and corpora")->capture_default_str();
  app.add_option("--max-monomials", g.max_monomials,
                 "Largest graded piece (number of monomials) allowed")
      ->capture_default_str();
  app.add_option("--samples", g.samples, "Number of sampled general linear forms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string poly, file, witness, form, blocks;
  bool cactus = false;
  std::vector<std::string> suites{"all"};
  std::size_t count = 10;

  auto* perp = app.add_subcommand("perp", "Hilbert function of T/F^perp");
  perp->add_option("polynomial", poly, "Homogeneous polynomial");
  perp->add_option("--file", file, "File with one polynomial per line");

  auto* rank = app.add_subcommand("rank", "Waring rank with a computing linear form");
  rank->add_option("polynomial", poly, "Homogeneous polynomial");
  rank->add_option("--file", file, "File with one polynomial per line");
  rank->add_option("--witness", witness, "Linear form t to use for the lower bound");

  auto* crank = app.add_subcommand("crank", "Cactus rank and its general-form lower bound");
  crank->add_option("polynomial", poly, "Homogeneous polynomial");
  crank->add_option("--file", file, "File with one polynomial per line");

  auto* bound = app.add_subcommand("bound", "dim T/((F^perp:t)+(t)) for a given t");
  bound->add_option("polynomial", poly, "Homogeneous polynomial")->required();
  bound->add_option("form", form, "Linear form, e.g. t_x + 2*t_y")->required();
  bound->add_flag("--cactus", cactus, "Compute dim T/(F^perp+(l)) instead");

  auto* additive = app.add_subcommand("additive", "Certify additivity over coprime blocks");
  additive->add_option("--blocks", blocks, "Blocks, e.g. \"x,y: x*y ; z,w: z*w\"");
  additive->add_option("--file", file, "File with one block declaration per line");
  additive->add_flag("--cactus", cactus, "Cactus rank instead of Waring rank");

  auto* verify = app.add_subcommand("verify", "Run verification suites on a seeded corpus");
  verify->add_option("--suite", suites, "Suite name (repeatable): all, " + [] {
    std::string s;
    for (const auto& k : known_suites()) s += (s.empty() ? "" : ", ") + k;
    return s;
  }());
  verify->add_option("--count", count, "Instances per suite")->capture_default_str();

  std::vector<std::string> argv_store{"apolar"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const std::size_t saved_cap = max_monomials();
  set_max_monomials(g.max_monomials);
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  Json error;
  try {
    if (command == "perp") {
      o = for_each_polynomial(polynomial_inputs(poly, file), perp_one);
    } else if (command == "rank") {
      o = for_each_polynomial(polynomial_inputs(poly, file),
                              [&](const std::string& p) { return rank_one(p, witness); });
    } else if (command == "crank") {
      o = for_each_polynomial(polynomial_inputs(poly, file),
                              [&](const std::string& p) { return crank_one(p, g); });
    } else if (command == "bound") {
      o = bound_one(poly, form, cactus);
    } else if (command == "additive") {
      o = additive_cmd(blocks, file, cactus, g);
    } else if (command == "verify") {
      o = verify_cmd(suites, count, g);
    }
  } catch (const ParseError& e) {
    o.code = kParseFailed;
    error = {{"type", "parse_error"},
             {"kind", error_kind(e.kind())},
             {"position", num(e.position())},
             {"message", e.what()}};
  } catch (const AlgebraicExtensionRequired& e) {
    o.code = kComputationFailed;
    error = {{"type", "algebraic_extension_required"}, {"message", e.what()}};
  } catch (const AssumptionNotSatisfied& e) {
    o.code = kComputationFailed;
    error = {{"type", "assumption_not_satisfied"}, {"message", e.what()}};
  } catch (const SizeLimitExceeded& e) {
    o.code = kComputationFailed;
    error = {{"type", "size_limit_exceeded"}, {"message", e.what()}};
  } catch (const Error& e) {
    o.code = kComputationFailed;
    error = {{"type", "error"}, {"message", e.what()}};
  }
  set_max_monomials(saved_cap);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  if (g.json) {
    Json report{{"command", command},
                {"inputs", o.inputs},
                {"outputs", o.outputs},
                {"seed", std::to_string(g.seed)},
                {"version", kVersion},
                {"timing", {{"elapsed_ms", std::to_string(elapsed.count())}}}};
    if (!error.is_null()) report["error"] = error;
    out << report.dump(2) << "\n";
  } else if (!error.is_null()) {
    err << "error";
    if (error.contains("position"))
      err << " at position " << error["position"].get<std::string>();
    err << ": " << error["message"].get<std::string>() << "\n";
  } else {
    out << o.text << "\n";
  }
  return o.code;
}

}  // namespace apolar::cli
