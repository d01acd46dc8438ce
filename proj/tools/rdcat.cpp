// rdcat: apply differential combinators to morphism literals and run the
// axiom checker from the command line.
//
// Exit status: 0 success, 1 a check found failures, 2 bad input or usage.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rdcat/rdcat.hpp"

namespace {

using rdcat::Split;

struct Options {
  std::string command;
  std::string cat;
  std::string rig = "int";
  std::string format = "text";
  std::string mode;
  std::size_t context = 0;
  std::optional<std::size_t> split;
  std::vector<std::string> literals;

  std::string suite = "rd";
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  double tol = 1e-7;
  std::size_t samples = 50;
  bool derived = false;
  bool generated = false;
  rdcat::GeneratorCaps caps{};
};

constexpr int kFailures = 1;
constexpr int kUsage = 2;

/// Usage problems detected after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json wrap(const Options& o, const std::string& result, const std::string& signature) {
  nlohmann::json input = o.literals.size() == 1 ? nlohmann::json(o.literals[0]) : nlohmann::json(o.literals);
  return {{"input", std::move(input)}, {"operation", o.command}, {"result", result}, {"signature", signature}};
}

template <class C>
int emit_morphism(const C& c, const Options& o, const rdcat::MorphismOf<C>& m) {
  if (o.format == "json") {
    std::cout << wrap(o, c.show(m), rdcat::signature(m)).dump() << "\n";
  } else {
    std::cout << c.show(m) << "\n";
  }
  return 0;
}

void print_report(const rdcat::CheckReport& r) {
  for (const auto& t : r.identities) {
    std::cout << (t.fail == 0 ? "PASS " : "FAIL ") << t.name << " (" << t.pass << "/" << (t.pass + t.fail)
              << ")\n";
    if (t.counterexample) {
      const auto& cx = *t.counterexample;
      std::cout << "  trial " << cx.trial << ": " << cx.detail << "\n";
      for (const auto& in : cx.inputs) std::cout << "  " << in << "\n";
      if (!cx.lhs.empty() || !cx.rhs.empty()) {
        std::cout << "  lhs: " << cx.lhs << "\n  rhs: " << cx.rhs << "\n";
      }
    }
  }
  std::cout << r.suite << " on " << r.category << "/" << r.rig << ": " << r.identities.size() << " identities, "
            << r.failures() << " failures, " << r.trials << " trials, seed " << r.seed << "\n";
}

template <class C>
int run_check_command(const C& c, const Options& o) {
  const auto suite = rdcat::suite_from_name(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  if (o.trials == 0) throw UsageError("--trials must be at least 1");
  rdcat::CheckSpec spec;
  spec.suite = *suite;
  spec.trials = o.trials;
  spec.seed = o.seed;
  spec.tol = o.tol;
  spec.samples = o.samples;
  spec.derived = o.derived;
  spec.caps = o.caps;

  // Literals given on the command line replace the default primary pool.
  std::vector<rdcat::MorphismOf<C>> pool;
  for (const auto& text : o.literals) pool.push_back(c.parse(text));
  if constexpr (std::is_same_v<C, rdcat::SmoothCategory>) {
    if (pool.empty() && !o.generated) pool = rdcat::smooth_reference_pool();
  }

  const auto report = rdcat::run_check(c, spec, pool);
  if (o.format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    print_report(report);
  }
  return report.passed() ? 0 : kFailures;
}

template <class C>
int run_command(const C& c, const Options& o) {
  if (o.command == "check") return run_check_command(c, o);

  std::vector<rdcat::MorphismOf<C>> in;
  for (const auto& text : o.literals) in.push_back(c.parse(text));
  const std::size_t expected = o.command == "compose" ? 2 : 1;
  if (in.size() != expected) {
    throw UsageError(o.command + " takes " + std::to_string(expected) + " morphism literal(s), got " +
                     std::to_string(in.size()));
  }
  const auto& f = in[0];

  if (o.command == "derive") {
    if (o.mode == "forward") return emit_morphism(c, o, c.forward(f));
    if (o.mode == "reverse") return emit_morphism(c, o, c.reverse(f));
    throw UsageError("--mode must be forward or reverse");
  }
  if (o.command == "dagger") return emit_morphism(c, o, rdcat::dagger(c, f));
  if (o.command == "ctx-dagger") {
    if (o.context > f.dom()) {
      throw rdcat::SignatureError("context " + std::to_string(o.context) + " exceeds the domain of " +
                                  rdcat::signature(f));
    }
    return emit_morphism(c, o, rdcat::contextual_dagger(c, f, Split{o.context, f.dom() - o.context}));
  }
  if (o.command == "compose") return emit_morphism(c, o, c.compose(in[0], in[1]));
  if (o.command == "linear") {
    const auto d = rdcat::native_forward(c);
    bool linear = false;
    if (o.split) {
      if (*o.split > f.dom()) throw rdcat::SignatureError("--in-second split exceeds the domain of " + rdcat::signature(f));
      linear = rdcat::is_linear_in_second(c, f, Split{*o.split, f.dom() - *o.split}, d);
    } else {
      linear = rdcat::is_linear(c, f, d);
    }
    if (o.format == "json") {
      auto j = wrap(o, linear ? "true" : "false", rdcat::signature(f));
      j["result"] = linear;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (linear ? "true" : "false") << "\n";
    }
    return 0;
  }
  if (o.command == "roundtrip") {
    // R => D => contextual dagger => R', then D => dagger => D' by cld.2.
    const auto rebuilt = rdcat::reverse_from_forward_dagger(c, f, rdcat::derived_forward(c),
                                                            rdcat::induced_contextual_dagger(c));
    const auto reverse_ok = c.compare(rebuilt, c.reverse(f));
    const auto forward_ok = rdcat::cld2_comparison(c, f);
    if (o.format == "json") {
      auto j = wrap(o, c.show(rebuilt), rdcat::signature(rebuilt));
      j["reverse_recovered"] = reverse_ok.equal;
      j["forward_recovered"] = forward_ok.equal;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << c.show(rebuilt) << "\n";
      if (!reverse_ok) std::cerr << "rdcat: rebuilt reverse derivative differs: " << reverse_ok.detail << "\n";
      if (!forward_ok) std::cerr << "rdcat: forward derivative not recovered: " << forward_ok.detail << "\n";
    }
    return reverse_ok.equal && forward_ok.equal ? 0 : kFailures;
  }
  throw UsageError("unknown command '" + o.command + "'");
}

std::string infer_category(const Options& o) {
  if (!o.cat.empty()) return o.cat;
  if (!o.literals.empty()) {
    const auto tag = rdcat::literal_tag(o.literals[0]);
    if (tag == "poly" || tag == "mat" || tag == "smooth") return tag;
  }
  return "poly";
}

int dispatch(const Options& o) {
  const std::string cat = infer_category(o);
  if (cat == "smooth") return run_command(rdcat::SmoothCategory{}, o);
  const rdcat::AnyRig rig = rdcat::rig_from_name(o.rig);
  return std::visit(
      [&](const auto& r) -> int {
        using R = std::decay_t<decltype(r)>;
        if (cat == "poly") return run_command(rdcat::PolyCategory<R>{r}, o);
        if (cat == "mat") return run_command(rdcat::MatCategory<R>{r}, o);
        throw UsageError("unknown category '" + cat + "' (expected poly, smooth or mat)");
      },
      rig);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--cat", o.cat, "Category: poly, smooth or mat (default: from the literal)")
      ->check(CLI::IsMember({"poly", "smooth", "mat"}));
  sub->add_option("--rig", o.rig, "Rig: int, nat, rat, bool, mod:<m> or tropical (ignored for smooth)")
      ->capture_default_str();
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reverse and forward differential combinators on polynomial, smooth and matrix morphisms"};
  app.require_subcommand(1);
  Options o;

  auto* derive = app.add_subcommand("derive", "Forward derivative D[f] or reverse derivative R[f]");
  derive->add_option("--mode", o.mode, "forward or reverse")->required()->check(CLI::IsMember({"forward", "reverse"}));
  derive->add_option("morphism", o.literals, "Morphism literal")->required();

  auto* dag = app.add_subcommand("dagger", "f-dagger = iota1 R[f]");
  dag->add_option("morphism", o.literals, "Morphism literal")->required();

  auto* ctx = app.add_subcommand("ctx-dagger", "Contextual dagger of f: C x A -> B");
  ctx->add_option("--context", o.context, "Arity of the context C")->required();
  ctx->add_option("morphism", o.literals, "Morphism literal")->required();

  auto* lin = app.add_subcommand("linear", "Decide whether D[f] = pi1 f");
  lin->add_option("--in-second", o.split, "Instead decide linearity in the second factor after this many inputs");
  lin->add_option("morphism", o.literals, "Morphism literal")->required();

  auto* comp = app.add_subcommand("compose", "Diagrammatic composite f g");
  comp->add_option("morphisms", o.literals, "Two morphism literals, f then g")->required()->expected(2);

  auto* check = app.add_subcommand("check", "Run an axiom or lemma suite over generated morphisms");
  check->add_option("--suite", o.suite, "rd, cdc, lemmas, dagger, roundtrip or fibration")
      ->check(CLI::IsMember({"rd", "cdc", "lemmas", "dagger", "roundtrip", "fibration"}))
      ->capture_default_str();
  check->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  check->add_option("--seed", o.seed, "Base seed")->envname("RDCAT_SEED")->capture_default_str();
  check->add_option("--tol", o.tol, "Tolerance for sampled equality")->capture_default_str();
  check->add_option("--samples", o.samples, "Sample points for sampled equality")->capture_default_str();
  check->add_flag("--derived", o.derived, "cdc: check the D induced from R");
  check->add_flag("--generated", o.generated, "smooth: use generated morphisms instead of the reference pool");
  check->add_option("--max-arity", o.caps.max_arity, "Largest generated arity")->capture_default_str();
  check->add_option("--max-degree", o.caps.max_degree, "Largest generated polynomial degree")->capture_default_str();
  check->add_option("--max-terms", o.caps.max_terms, "Most terms per generated polynomial")->capture_default_str();
  check->add_option("--max-depth", o.caps.max_depth, "Deepest generated smooth expression")->capture_default_str();
  check->add_option("morphisms", o.literals, "Optional literals used as the primary morphisms");

  auto* round = app.add_subcommand("roundtrip", "Rebuild R from D and the contextual dagger");
  round->add_option("morphism", o.literals, "Morphism literal")->required();

  for (auto* sub : {derive, dag, ctx, lin, comp, check, round}) add_common(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(o);
  } catch (const rdcat::ParseError& e) {
    std::cerr << "rdcat: parse error: " << e.what() << "\n";
  } catch (const rdcat::SignatureError& e) {
    std::cerr << "rdcat: signature error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "rdcat: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "rdcat: " << e.what() << "\n";
  }
  return kUsage;
}
