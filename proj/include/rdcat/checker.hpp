#pragma once

// Randomized equational checker. Every suite is written once against the
// category interface and asks the category's own equality oracle, so the
// same code checks exact (POLY, MAT) and sampled (Smooth) instances.
//
// Trial t draws everything from Rng(seed + t); the morphisms of one trial are
// shared by all identities of that trial. A trial's report depends only on
// (spec, t), and merging reports is associative and commutative up to
// identity order, so trials could run in any order or in parallel.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdcat/combinators.hpp"
#include "rdcat/fibration.hpp"

namespace rdcat {

enum class Suite { rd, cdc, lemmas, dagger, roundtrip, fibration };

inline constexpr std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::rd: return "rd";
    case Suite::cdc: return "cdc";
    case Suite::lemmas: return "lemmas";
    case Suite::dagger: return "dagger";
    case Suite::roundtrip: return "roundtrip";
    case Suite::fibration: return "fibration";
  }
  return "unknown";
}

inline std::optional<Suite> suite_from_name(std::string_view name) {
  for (Suite s : {Suite::rd, Suite::cdc, Suite::lemmas, Suite::dagger, Suite::roundtrip, Suite::fibration}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

struct CheckSpec {
  Suite suite = Suite::rd;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  GeneratorCaps caps{};
  // Sampled oracles only.
  double tol = 1e-7;
  std::size_t samples = 50;
  // CDC suite: check the D induced from R instead of the native one.
  bool derived = false;
};

struct Counterexample {
  std::size_t trial = 0;
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct IdentityTally {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::optional<Counterexample> counterexample;  // first failure, by trial index
};

struct CheckReport {
  std::string suite;
  std::string category;
  std::string rig;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityTally> identities;
  double elapsed_ms = 0.0;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& t : identities) n += t.fail;
    return n;
  }

  bool passed() const { return failures() == 0; }

  const IdentityTally* find(std::string_view name) const {
    for (const auto& t : identities) {
      if (t.name == name) return &t;
    }
    return nullptr;
  }

  IdentityTally& tally(std::string_view name) {
    for (auto& t : identities) {
      if (t.name == name) return t;
    }
    identities.push_back(IdentityTally{std::string(name), 0, 0, std::nullopt});
    return identities.back();
  }

  /// Sums counts by identity name and keeps the earliest counterexample.
  void merge(const CheckReport& other) {
    for (const auto& t : other.identities) {
      auto& mine = tally(t.name);
      mine.pass += t.pass;
      mine.fail += t.fail;
      if (t.counterexample && (!mine.counterexample || t.counterexample->trial < mine.counterexample->trial)) {
        mine.counterexample = t.counterexample;
      }
    }
    trials += other.trials;
    elapsed_ms += other.elapsed_ms;
  }

  nlohmann::json to_json() const {
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& t : identities) {
      nlohmann::json j = {{"name", t.name}, {"pass", t.pass}, {"fail", t.fail}};
      if (t.counterexample) {
        const auto& cx = *t.counterexample;
        j["counterexample"] = {
            {"trial", cx.trial}, {"inputs", cx.inputs}, {"lhs", cx.lhs}, {"rhs", cx.rhs}, {"detail", cx.detail}};
      }
      ids.push_back(std::move(j));
    }
    return {{"suite", suite},       {"category", category}, {"rig", rig},
            {"trials", trials},     {"seed", seed},         {"identities", std::move(ids)},
            {"elapsed_ms", elapsed_ms}};
  }
};

template <class C>
std::string rig_name_of(const C& c) {
  if constexpr (requires { c.rig.name(); }) {
    return c.rig.name();
  } else {
    return "real";
  }
}

/// (<1,0> x 1) D[D[f]-dagger[A]]-dagger[A x B] pi1 = D[f], with D induced
/// from R and the induced contextual dagger.
///
///   D[f]                : A x A -> B
///   D[f]-dagger[A]      : A x B -> A                    split (A, A)
///   D[that]             : (A x B) x (A x B) -> A
///   that-dagger[A x B]  : (A x B) x A -> A x B          split (A + B, A + B)
///   <1,0> x 1           : A x A -> (A x B) x A          <1,0> = iota0 split (A, B)
///   pi1                 : A x B -> B                    split (A, B)
template <ReverseDifferential C>
Comparison cld2_comparison(const C& c, const MorphismOf<C>& f) {
  const std::size_t a = f.dom();
  const std::size_t b = f.cod();
  const auto df = forward_from_reverse(c, f);
  const auto inner = contextual_dagger(c, df, Split{a, a});
  const auto outer = contextual_dagger(c, forward_from_reverse(c, inner), Split{a + b, a + b});
  const auto lhs = seq(c, product(c, iota0(c, a, b), c.identity(a)), outer, pi1(c, a, b));
  return c.compare(lhs, df);
}

namespace detail {

template <class M>
struct Labeled {
  const char* label;
  const M& morphism;
};

/// One trial: a seeded generator, the shared morphisms, and the tallies.
template <Generating C>
class Trial {
 public:
  using M = MorphismOf<C>;
  using Inputs = std::initializer_list<Labeled<M>>;

  Trial(const C& c, const CheckSpec& spec, std::size_t index, CheckReport& report)
      : c_(c), spec_(spec), index_(index), report_(report), rng_(spec.seed + index) {}

  const C& cat() const { return c_; }
  Rng& rng() { return rng_; }

  /// 0 with probability 1/10, otherwise 1..max_arity.
  std::size_t arity() {
    const std::size_t hi = std::max<std::size_t>(spec_.caps.max_arity, 1);
    return rng_.chance(1, 10) ? 0 : rng_.between(1, hi);
  }

  std::size_t positive_arity() { return rng_.between(1, std::max<std::size_t>(spec_.caps.max_arity, 1)); }

  M gen(std::size_t dom, std::size_t cod) { return c_.generate(rng_, dom, cod, spec_.caps); }
  M gen_linear(std::size_t dom, std::size_t cod) { return c_.generate_linear(rng_, dom, cod, spec_.caps); }

  /// lhs == rhs under the category's oracle.
  void expect(std::string_view name, Inputs inputs, const std::function<Comparison()>& body) {
    Comparison result;
    try {
      result = body();
    } catch (const std::exception& e) {
      result = Comparison{false, "", "", std::string("exception: ") + e.what()};
    }
    record(name, inputs, result);
  }

  /// lhs != rhs is the expected outcome.
  void expect_distinct(std::string_view name, Inputs inputs, const std::function<Comparison()>& body) {
    Comparison result;
    try {
      const Comparison cmp = body();
      result = cmp.equal ? Comparison{false, cmp.lhs, cmp.rhs, "expected the two sides to differ"} : Comparison{};
    } catch (const std::exception& e) {
      result = Comparison{false, "", "", std::string("exception: ") + e.what()};
    }
    record(name, inputs, result);
  }

  /// A boolean property; `detail` explains a false outcome.
  void expect_true(std::string_view name, Inputs inputs, const std::function<bool()>& body, std::string_view detail) {
    Comparison result;
    try {
      result = body() ? Comparison{} : Comparison{false, "false", "true", std::string(detail)};
    } catch (const std::exception& e) {
      result = Comparison{false, "", "", std::string("exception: ") + e.what()};
    }
    record(name, inputs, result);
  }

 private:
  void record(std::string_view name, Inputs inputs, const Comparison& result) {
    auto& t = report_.tally(name);
    if (result.equal) {
      ++t.pass;
      return;
    }
    ++t.fail;
    if (t.counterexample) return;
    Counterexample cx{index_, {}, result.lhs, result.rhs, result.detail};
    for (const auto& in : inputs) cx.inputs.push_back(std::string(in.label) + " = " + c_.show(in.morphism));
    t.counterexample = std::move(cx);
  }

  const C& c_;
  const CheckSpec& spec_;
  std::size_t index_;
  CheckReport& report_;
  Rng rng_;
};

template <class C>
using ForwardFn = std::function<MorphismOf<C>(const MorphismOf<C>&)>;

template <ReverseDifferential C>
ForwardFn<C> forward_for(const C& c, bool derived) {
  if constexpr (ForwardDifferential<C>) {
    if (!derived) return native_forward(c);
  }
  return derived_forward(c);
}

/// Nonlinear morphism of the given arities, or nullopt if none turns up
/// within a few draws (in MAT every morphism is linear).
template <Generating C, class Forward>
std::optional<MorphismOf<C>> draw_nonlinear(Trial<C>& t, std::size_t dom, std::size_t cod, Forward&& d) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto f = t.gen(dom, cod);
    if (!is_linear(t.cat(), f, d)) return f;
  }
  return std::nullopt;
}

/// A map I x A -> B linear in A, built as the contextual dagger of a random
/// I x B -> A.
template <Generating C>
MorphismOf<C> draw_linear_in_second(Trial<C>& t, std::size_t i, std::size_t a, std::size_t b) {
  return contextual_dagger(t.cat(), t.gen(i + b, a), Split{i, b});
}

// ---------------------------------------------------------------- RD

template <Generating C>
void rd_trial(Trial<C>& t, const MorphismOf<C>& f) {
  const C& c = t.cat();
  const std::size_t a = f.dom();
  const std::size_t b = f.cod();
  auto R = [&c](const auto& m) { return c.reverse(m); };

  const auto g = t.gen(a, b);
  t.expect("RD.1 sum", {{"f", f}, {"g", g}}, [&] { return c.compare(R(c.add(f, g)), c.add(R(f), R(g))); });
  t.expect("RD.1 zero", {}, [&] { return c.compare(R(c.zero(a, b)), c.zero(a + b, a)); });

  // Points 1 -> A as constant tuples, and general maps X -> A.
  for (const bool general : {false, true}) {
    const std::size_t x = general ? t.arity() : 0;
    const auto p = t.gen(x, a);
    const auto q = t.gen(x, b);
    const auto r = t.gen(x, b);
    const char* name = general ? "RD.2 additive (general)" : "RD.2 additive (points)";
    t.expect(name, {{"f", f}, {"a", p}, {"b", q}, {"c", r}}, [&] {
      return c.compare(c.compose(c.pair(p, c.add(q, r)), R(f)),
                       c.add(c.compose(c.pair(p, q), R(f)), c.compose(c.pair(p, r), R(f))));
    });
    t.expect(general ? "RD.2 zero (general)" : "RD.2 zero (points)", {{"f", f}, {"a", p}}, [&] {
      return c.compare(c.compose(c.pair(p, c.zero(x, b)), R(f)), c.zero(x, a));
    });
  }

  const std::size_t b2 = t.arity();
  t.expect("RD.3 identity", {}, [&] { return c.compare(R(c.identity(a)), pi1(c, a, a)); });
  t.expect("RD.3 pi0", {}, [&] {
    return c.compare(R(pi0(c, a, b2)), c.compose(pi1(c, a + b2, a), iota0(c, a, b2)));
  });
  t.expect("RD.3 pi1", {}, [&] {
    return c.compare(R(pi1(c, a, b2)), c.compose(pi1(c, a + b2, b2), iota1(c, a, b2)));
  });

  const auto h = t.gen(a, t.arity());
  t.expect("RD.4 pairing", {{"f", f}, {"g", h}}, [&] {
    const auto lhs = R(c.pair(f, h));
    const auto rhs = c.add(c.compose(product(c, c.identity(a), pi0(c, b, h.cod())), R(f)),
                           c.compose(product(c, c.identity(a), pi1(c, b, h.cod())), R(h)));
    return c.compare(lhs, rhs);
  });
  t.expect("RD.4 terminal", {}, [&] { return c.compare(R(c.bang(a)), c.zero(a, a)); });

  const auto k = t.gen(b, t.arity());
  t.expect("RD.5 chain rule", {{"f", f}, {"g", k}}, [&] {
    const auto rhs = seq(c, chain_context(c, f, k.cod()), product(c, c.identity(a), R(k)), R(f));
    return c.compare(R(c.compose(f, k)), rhs);
  });

  t.expect("RD.6", {{"f", f}}, [&] {
    const auto rrr = R(R(R(f)));
    const auto lift = product(c, iota0(c, a + b, a), c.identity(a + b));
    const auto spread = c.pair(product(c, c.identity(a), pi0(c, b, b)), product(c, c.zero(a, a), pi1(c, b, b)));
    const auto lhs = seq(c, spread, lift, rrr, pi1(c, a + b, a));
    const auto rhs = c.compose(product(c, c.identity(a), pi1(c, b, b)), R(f));
    return c.compare(lhs, rhs);
  });

  t.expect("RD.7", {{"f", f}}, [&] {
    const auto df = forward_from_reverse(c, f);
    const auto ddf = forward_from_reverse(c, df);
    return c.compare(ddf, c.compose(exchange(c, a, a, a, a), ddf));
  });
}

// ---------------------------------------------------------------- CDC

template <Generating C>
void cdc_trial(Trial<C>& t, const MorphismOf<C>& f, const ForwardFn<C>& D, bool compare_native) {
  const C& c = t.cat();
  const std::size_t a = f.dom();
  const std::size_t b = f.cod();

  const auto g = t.gen(a, b);
  t.expect("CDC.1 sum", {{"f", f}, {"g", g}}, [&] { return c.compare(D(c.add(f, g)), c.add(D(f), D(g))); });
  t.expect("CDC.1 zero", {}, [&] { return c.compare(D(c.zero(a, b)), c.zero(a + a, b)); });

  for (const bool general : {false, true}) {
    const std::size_t x = general ? t.arity() : 0;
    const auto p = t.gen(x, a);
    const auto q = t.gen(x, a);
    const auto r = t.gen(x, a);
    t.expect(general ? "CDC.2 additive (general)" : "CDC.2 additive (points)",
             {{"f", f}, {"a", p}, {"b", q}, {"c", r}}, [&] {
               return c.compare(c.compose(c.pair(p, c.add(q, r)), D(f)),
                                c.add(c.compose(c.pair(p, q), D(f)), c.compose(c.pair(p, r), D(f))));
             });
    t.expect(general ? "CDC.2 zero (general)" : "CDC.2 zero (points)", {{"f", f}, {"a", p}}, [&] {
      return c.compare(c.compose(c.pair(p, c.zero(x, a)), D(f)), c.zero(x, b));
    });
  }

  const std::size_t b2 = t.arity();
  t.expect("CDC.3 identity", {}, [&] { return c.compare(D(c.identity(a)), pi1(c, a, a)); });
  t.expect("CDC.3 pi0", {}, [&] {
    return c.compare(D(pi0(c, a, b2)), c.compose(pi1(c, a + b2, a + b2), pi0(c, a, b2)));
  });
  t.expect("CDC.3 pi1", {}, [&] {
    return c.compare(D(pi1(c, a, b2)), c.compose(pi1(c, a + b2, a + b2), pi1(c, a, b2)));
  });

  const auto h = t.gen(a, t.arity());
  t.expect("CDC.4", {{"f", f}, {"g", h}}, [&] { return c.compare(D(c.pair(f, h)), c.pair(D(f), D(h))); });

  const auto k = t.gen(b, t.arity());
  t.expect("CDC.5", {{"f", f}, {"g", k}}, [&] {
    return c.compare(D(c.compose(f, k)), c.compose(c.pair(c.compose(pi0(c, a, a), f), D(f)), D(k)));
  });

  const std::size_t x = t.arity();
  const auto pa = t.gen(x, a);
  const auto pb = t.gen(x, a);
  const auto pc = t.gen(x, a);
  const auto pd = t.gen(x, a);
  const auto ddf = D(D(f));
  t.expect("CDC.6", {{"f", f}, {"a", pa}, {"b", pb}, {"c", pc}}, [&] {
    const auto lhs = c.compose(c.pair(c.pair(pa, pb), c.pair(c.zero(x, a), pc)), ddf);
    return c.compare(lhs, c.compose(c.pair(pa, pc), D(f)));
  });
  t.expect("CDC.7", {{"f", f}, {"a", pa}, {"b", pb}, {"c", pc}, {"d", pd}}, [&] {
    return c.compare(c.compose(c.pair(c.pair(pa, pb), c.pair(pc, pd)), ddf),
                     c.compose(c.pair(c.pair(pa, pc), c.pair(pb, pd)), ddf));
  });
  t.expect("CDC.6 alternative", {{"f", f}}, [&] {
    const auto spread = c.pair(product(c, c.identity(a), pi0(c, a, a)), product(c, c.zero(a, a), pi1(c, a, a)));
    return c.compare(c.compose(spread, ddf), c.compose(product(c, c.identity(a), pi1(c, a, a)), D(f)));
  });
  t.expect("CDC.7 alternative", {{"f", f}}, [&] {
    return c.compare(c.compose(exchange(c, a, a, a, a), ddf), ddf);
  });

  if constexpr (ForwardDifferential<C>) {
    if (compare_native) {
      t.expect("derived D equals direct D", {{"f", f}}, [&] {
        return c.compare(forward_from_reverse(c, f), c.forward(f));
      });
    }
  }
}

// ---------------------------------------------------------------- lemmas

template <Generating C>
void lemma_trial(Trial<C>& t, const MorphismOf<C>& f) {
  const C& c = t.cat();
  const auto D = derived_forward(c);
  auto R = [&c](const auto& m) { return c.reverse(m); };
  const std::size_t a = f.dom();
  const std::size_t b = f.cod();

  // Cartesian left additive structure.
  {
    const std::size_t x = t.arity();
    const auto u = t.gen(x, a);
    const auto v = t.gen(x, a);
    const auto g = t.gen(a, b);
    t.expect("clac left additive", {{"x", u}, {"f", f}, {"g", g}}, [&] {
      return c.compare(c.compose(u, c.add(f, g)), c.add(c.compose(u, f), c.compose(u, g)));
    });
    t.expect("clac left zero", {{"x", u}}, [&] { return c.compare(c.compose(u, c.zero(a, b)), c.zero(x, b)); });
    const std::size_t a2 = t.arity();
    const auto w = t.gen(x, a + a2);
    const auto y = t.gen(x, a + a2);
    t.expect("clac projections additive", {{"x", w}, {"y", y}}, [&] {
      const auto p = pi0(c, a, a2);
      const auto lhs = c.pair(c.compose(c.add(w, y), p), c.compose(c.add(w, y), pi1(c, a, a2)));
      const auto rhs = c.pair(c.add(c.compose(w, p), c.compose(y, p)),
                              c.add(c.compose(w, pi1(c, a, a2)), c.compose(y, pi1(c, a, a2))));
      return c.compare(lhs, rhs);
    });
    const auto h = t.gen(a, t.arity());
    t.expect("clac pairing laws", {{"f", f}, {"g", h}}, [&] {
      const auto fg = c.pair(f, h);
      if (auto r = c.compare(c.compose(fg, pi0(c, b, h.cod())), f); !r) return r;
      if (auto r = c.compare(c.compose(fg, pi1(c, b, h.cod())), h); !r) return r;
      return c.compare(c.pair(pi0(c, a, a2), pi1(c, a, a2)), c.identity(a + a2));
    });
    t.expect("clac-simple injections", {{"f", f}, {"g", h}}, [&] {
      return c.compare(c.add(c.compose(f, iota0(c, b, h.cod())), c.compose(h, iota1(c, b, h.cod()))), c.pair(f, h));
    });
    const auto k = t.gen(a2, t.arity());
    t.expect("clac-simple oplus", {{"h", f}, {"k", k}}, [&] { return c.compare(oplus(c, f, k), product(c, f, k)); });
  }

  const std::size_t b2 = t.arity();
  const std::size_t cc = t.arity();

  const auto g = t.gen(b, cc);
  t.expect("reverse-der-basic 1", {{"f", f}, {"g", g}}, [&] {
    const auto inner = c.compose(c.pair(c.compose(pi0(c, a, cc), f), pi1(c, a, cc)), R(g));
    return c.compare(R(c.compose(f, g)), c.compose(c.pair(pi0(c, a, cc), inner), R(f)));
  });

  t.expect("reverse-der-basic 2", {}, [&] {
    if (auto r = c.compare(R(iota0(c, a, b2)), c.compose(pi1(c, a, a + b2), pi0(c, a, b2))); !r) return r;
    return c.compare(R(iota1(c, a, b2)), c.compose(pi1(c, b2, a + b2), pi1(c, a, b2)));
  });

  t.expect("reverse-der-basic 3", {{"f", f}}, [&] {
    const auto lhs0 = R(c.compose(pi0(c, a, b2), f));
    const auto rhs0 = seq(c, product(c, pi0(c, a, b2), c.identity(b)), R(f), iota0(c, a, b2));
    if (auto r = c.compare(lhs0, rhs0); !r) return r;
    const auto lhs1 = R(c.compose(pi1(c, b2, a), f));
    const auto rhs1 = seq(c, product(c, pi1(c, b2, a), c.identity(b)), R(f), iota1(c, b2, a));
    return c.compare(lhs1, rhs1);
  });

  {
    const auto fs = t.gen(a, b + b2);
    t.expect("reverse-der-basic 4", {{"f", fs}}, [&] {
      const auto lhs0 = R(c.compose(fs, pi0(c, b, b2)));
      if (auto r = c.compare(lhs0, c.compose(product(c, c.identity(a), iota0(c, b, b2)), R(fs))); !r) return r;
      const auto lhs1 = R(c.compose(fs, pi1(c, b, b2)));
      return c.compare(lhs1, c.compose(product(c, c.identity(a), iota1(c, b, b2)), R(fs)));
    });
  }

  {
    const std::size_t d = t.arity();
    const auto k = t.gen(cc, d);
    // f: A -> B, k: C -> D; ex: (A x C) x (B x D) -> (A x B) x (C x D).
    const auto ex = exchange(c, a, cc, b, d);
    t.expect("reverse-der-basic 5", {{"f", f}, {"g", k}}, [&] {
      return c.compare(R(product(c, f, k)), c.compose(ex, product(c, R(f), R(k))));
    });
    t.expect("reverse-der-basic 9", {{"f", f}, {"g", k}}, [&] {
      return c.compare(R(oplus(c, f, k)), c.compose(ex, product(c, R(f), R(k))));
    });
  }

  {
    const auto fp = t.gen(a + b2, cc);
    t.expect("reverse-der-basic 6", {{"f", fp}}, [&] {
      const auto lhs0 = R(c.compose(iota0(c, a, b2), fp));
      const auto rhs0 = seq(c, product(c, iota0(c, a, b2), c.identity(cc)), R(fp), pi0(c, a, b2));
      if (auto r = c.compare(lhs0, rhs0); !r) return r;
      const auto lhs1 = R(c.compose(iota1(c, a, b2), fp));
      const auto rhs1 = seq(c, product(c, iota1(c, a, b2), c.identity(cc)), R(fp), pi1(c, a, b2));
      return c.compare(lhs1, rhs1);
    });
  }

  t.expect("reverse-der-basic 7", {{"f", f}}, [&] {
    const auto lhs0 = R(c.compose(f, iota0(c, b, b2)));
    if (auto r = c.compare(lhs0, c.compose(product(c, c.identity(a), pi0(c, b, b2)), R(f))); !r) return r;
    const auto lhs1 = R(c.compose(f, iota1(c, b2, b)));
    return c.compare(lhs1, c.compose(product(c, c.identity(a), pi1(c, b2, b)), R(f)));
  });

  {
    const auto k = t.gen(b2, b);
    // <f|k>: A x B2 -> B.
    const auto cp = copair(c, f, k);
    t.expect("reverse-der-basic 8", {{"f", f}, {"g", k}}, [&] {
      const auto rhs = c.pair(c.compose(product(c, pi0(c, a, b2), c.identity(b)), R(f)),
                              c.compose(product(c, pi1(c, a, b2), c.identity(b)), R(k)));
      return c.compare(R(cp), rhs);
    });
    t.expect("reverse-der-basic 8 (sum form)", {{"f", f}, {"g", k}}, [&] {
      return c.compare(R(cp), c.add(R(c.compose(pi0(c, a, b2), f)), R(c.compose(pi1(c, a, b2), k))));
    });
  }

  t.expect("rd6-alternative-form", {{"f", f}}, [&] {
    const auto lift = product(c, c.pair(iota0(c, a, b), c.zero(a, a)), iota1(c, a, b));
    return c.compare(seq(c, lift, R(R(R(f))), pi1(c, a + b, a)), R(f));
  });
  t.expect("rd6 reverse derivative linear in second", {{"f", f}}, [&] {
    return linear_in_second_comparison(c, R(f), Split{a, b}, D);
  });

  // Both characterizations of linearity, on a linear map and on f.
  {
    const auto lin = t.gen_linear(a, b);
    t.expect("linear-equiv linear map", {{"f", lin}}, [&] {
      if (auto r = linear_comparison(c, lin, D); !r) return r;
      return c.compare(c.compose(iota1(c, a, a), D(lin)), lin);
    });
    t.expect_true("linear-equiv predicates agree", {{"f", f}}, [&] {
      return is_linear(c, f, D) == c.compare(c.compose(iota1(c, a, a), D(f)), f).equal;
    }, "D[f] = pi1 f and iota1 D[f] = f disagree");
  }
  {
    const std::size_t x = t.arity();
    const auto lb = draw_linear_in_second(t, x, a, b);
    const auto fx = t.gen(x + a, b);
    const Split s{x, a};
    auto definition = [&](const auto& m) {
      return c.compare(partial_derivative(c, m, s, D), c.compose(product(c, c.identity(x), pi1(c, a, a)), m));
    };
    t.expect("partial-linear-equiv linear in second", {{"f", lb}}, [&] {
      if (auto r = definition(lb); !r) return r;
      return linear_in_second_comparison(c, lb, s, D);
    });
    t.expect_true("partial-linear-equiv predicates agree", {{"f", fx}}, [&] {
      return definition(fx).equal == is_linear_in_second(c, fx, s, D);
    }, "D_B[f] = (1 x pi1) f and (iota0 x iota1) D[f] = f disagree");

    // Contextual dagger characterization, split (C, A) = (x, a).
    auto exchange_form = [&](const auto& m) {
      const auto inject = product(c, iota0(c, x, x), iota1(c, a, a));
      return c.compare(seq(c, inject, exchange(c, x, x, a, a), D(m)), m);
    };
    auto double_dagger = [&](const auto& m) {
      return c.compare(contextual_dagger(c, contextual_dagger(c, m, s), Split{x, m.cod()}), m);
    };
    t.expect("dagger-context-linear linear in second", {{"f", lb}}, [&] {
      if (auto r = exchange_form(lb); !r) return r;
      return double_dagger(lb);
    });
    t.expect_true("dagger-context-linear predicates agree", {{"f", fx}}, [&] {
      const bool linear = definition(fx).equal;
      return exchange_form(fx).equal == linear && double_dagger(fx).equal == linear;
    }, "linear in A, (iota0 x iota1) ex D[f] = f and the double contextual dagger disagree");
  }

  t.expect("cld.2", {{"f", f}}, [&] { return cld2_comparison(c, f); });
}

// ---------------------------------------------------------------- dagger

template <Generating C>
void dagger_trial(Trial<C>& t) {
  const C& c = t.cat();
  const auto D = derived_forward(c);
  auto dag = [&c](const auto& m) { return dagger(c, m); };
  const std::size_t a = t.arity();
  const std::size_t b = t.arity();
  const std::size_t cc = t.arity();

  const auto f = t.gen_linear(a, b);
  const auto g = t.gen_linear(b, cc);
  const auto h = t.gen_linear(a, b);

  t.expect("dagger involution", {{"f", f}}, [&] { return c.compare(dag(dag(f)), f); });
  t.expect("dagger contravariant", {{"f", f}, {"g", g}}, [&] {
    return c.compare(dag(c.compose(f, g)), c.compose(dag(g), dag(f)));
  });
  t.expect("dagger identity", {}, [&] { return c.compare(dag(c.identity(a)), c.identity(a)); });
  t.expect("dagger projections", {}, [&] {
    if (auto r = c.compare(dag(pi0(c, a, b)), iota0(c, a, b)); !r) return r;
    return c.compare(dag(pi1(c, a, b)), iota1(c, a, b));
  });
  t.expect("dagger injections", {}, [&] {
    if (auto r = c.compare(dag(iota0(c, a, b)), pi0(c, a, b)); !r) return r;
    return c.compare(dag(iota1(c, a, b)), pi1(c, a, b));
  });
  t.expect("dagger additive", {{"f", f}, {"g", h}}, [&] {
    return c.compare(dag(c.add(f, h)), c.add(dag(f), dag(h)));
  });
  t.expect("dagger zero", {}, [&] { return c.compare(dag(c.zero(a, b)), c.zero(b, a)); });

  // The three characterizations of linearity agree on linear and nonlinear maps.
  auto double_reverse = [&](const auto& m) {
    const auto lift = product(c, iota0(c, m.dom(), m.cod()), c.identity(m.dom()));
    return c.compare(seq(c, iota1(c, m.dom(), m.dom()), lift, c.reverse(c.reverse(m)), pi1(c, m.dom(), m.cod())), m);
  };
  t.expect("linear-reverse linear map", {{"f", f}}, [&] {
    if (auto r = linear_comparison(c, f, D); !r) return r;
    if (auto r = double_reverse(f); !r) return r;
    return c.compare(dag(dag(f)), f);
  });

  if (const auto n = draw_nonlinear(t, t.positive_arity(), std::max<std::size_t>(b, 1), D)) {
    t.expect_distinct("dagger not involutive on nonlinear", {{"f", *n}}, [&] { return c.compare(dag(dag(*n)), *n); });
    t.expect_true("linear-reverse nonlinear map", {{"f", *n}}, [&] {
      return !is_linear(c, *n, D) && !double_reverse(*n).equal && !c.compare(dag(dag(*n)), *n).equal;
    }, "a characterization of linearity accepted a nonlinear map");
  }

  if constexpr (requires { c.transpose(f); }) {
    const auto m = t.gen(a, b);
    t.expect("dagger is transpose", {{"f", m}}, [&] { return c.compare(dag(m), c.transpose(m)); });
  }
}

// ---------------------------------------------------------------- roundtrip

template <Generating C>
void roundtrip_trial(Trial<C>& t, const MorphismOf<C>& f) {
  const C& c = t.cat();
  const auto ctx = induced_contextual_dagger(c);
  t.expect("R from derived D and contextual dagger", {{"f", f}}, [&] {
    return c.compare(reverse_from_forward_dagger(c, f, derived_forward(c), ctx), c.reverse(f));
  });
  if constexpr (ForwardDifferential<C>) {
    t.expect("R from native D and contextual dagger", {{"f", f}}, [&] {
      return c.compare(reverse_from_forward_dagger(c, f, native_forward(c), ctx), c.reverse(f));
    });
    if constexpr (requires { c.contextual_transpose(f, Split{}); }) {
      t.expect("R from native D and transpose", {{"f", f}}, [&] {
        auto transpose_ctx = [&c](const auto& g, Split s) { return c.contextual_transpose(g, s); };
        return c.compare(reverse_from_forward_dagger(c, f, native_forward(c), transpose_ctx), c.reverse(f));
      });
    }
  }
  t.expect("D recovered (cld.2)", {{"f", f}}, [&] { return cld2_comparison(c, f); });
  const std::size_t a = f.dom();
  t.expect("identity fixed", {}, [&] {
    return c.compare(reverse_from_forward_dagger(c, c.identity(a), derived_forward(c), ctx), pi1(c, a, a));
  });
}

// ---------------------------------------------------------------- fibration

template <Generating C>
void fibration_trial(Trial<C>& t, const MorphismOf<C>& f) {
  const C& c = t.cat();
  const auto D = derived_forward(c);
  const std::size_t a = f.dom();
  const std::size_t b = f.cod();
  const auto g = t.gen(b, t.arity());
  const auto h = t.gen(g.cod(), t.arity());

  const auto rf = reverse_functor(c, f);
  const auto rg = reverse_functor(c, g);

  t.expect("reverse functor composition", {{"f", f}, {"g", g}}, [&] {
    return linfib_compare(c, linfib_compose(c, rf, rg), reverse_functor(c, c.compose(f, g)));
  });
  t.expect("reverse functor identity", {}, [&] {
    return linfib_compare(c, reverse_functor(c, c.identity(a)), linfib_identity(c, a, a));
  });
  t.expect("identity is a two-sided unit", {{"f", f}}, [&] {
    if (auto r = linfib_compare(c, linfib_compose(c, linfib_identity(c, a, a), rf), rf); !r) return r;
    return linfib_compare(c, linfib_compose(c, rf, linfib_identity(c, b, b)), rf);
  });
  t.expect("composition associative", {{"f", f}, {"g", g}, {"h", h}}, [&] {
    const auto rh = reverse_functor(c, h);
    return linfib_compare(c, linfib_compose(c, linfib_compose(c, rf, rg), rh),
                          linfib_compose(c, rf, linfib_compose(c, rg, rh)));
  });
  t.expect_true("reverse derivative is a valid fiber", {{"f", f}}, [&] {
    make_linfib(c, f, c.reverse(f), D);
    return true;
  }, "R[f] rejected as a fiber");

  // (f, pi1) then (f', g') has fiber (f x 1) g'.
  {
    const std::size_t fiber = t.arity();
    const std::size_t cc = t.arity();
    const auto cart = LinFibMorphism<MorphismOf<C>>{f, pi1(c, a, fiber), Split{a, fiber}};
    const auto gp = draw_linear_in_second(t, b, cc, fiber);
    const LinFibMorphism<MorphismOf<C>> second{g, gp, Split{b, cc}};
    t.expect("cartesian map reindexes", {{"f", f}, {"f'", g}, {"g'", gp}}, [&] {
      const auto composite = linfib_compose(c, cart, second);
      return c.compare(composite.fiber, c.compose(product(c, f, c.identity(cc)), gp));
    });
  }

  // The contextual dagger is a functor from the simple linear fibration.
  {
    const std::size_t fa = t.arity();
    const std::size_t fb = t.arity();
    const std::size_t fc = t.arity();
    const SimpleLinMorphism<MorphismOf<C>> s1{f, draw_linear_in_second(t, a, fa, fb), Split{a, fa}};
    const SimpleLinMorphism<MorphismOf<C>> s2{g, draw_linear_in_second(t, b, fb, fc), Split{b, fb}};
    t.expect("contextual dagger functor", {{"f", f}, {"g", s1.fiber}, {"f'", g}, {"g'", s2.fiber}}, [&] {
      return linfib_compare(c, dagger_functor(c, simple_compose(c, s1, s2)),
                            linfib_compose(c, dagger_functor(c, s1), dagger_functor(c, s2)));
    });
    t.expect("pi1 is dagger-fixed", {}, [&] {
      return c.compare(contextual_dagger(c, pi1(c, a, fa), Split{a, fa}), pi1(c, a, fa));
    });
  }
}

}  // namespace detail

/// Runs one suite. When `pool` is non-empty, trial t uses pool[t % size] as
/// its primary morphism; the remaining morphisms are always generated.
template <Generating C>
  requires ReverseDifferential<C>
CheckReport run_check(const C& category, const CheckSpec& spec, const std::vector<MorphismOf<C>>& pool = {}) {
  const auto start = std::chrono::steady_clock::now();
  C c = category;
  if constexpr (requires { c.equality; }) {
    c.equality.tol = spec.tol;
    c.equality.samples = spec.samples;
  }
  CheckReport report;
  report.suite = std::string(suite_name(spec.suite));
  report.category = c.name();
  report.rig = rig_name_of(c);
  report.seed = spec.seed;

  for (std::size_t i = 0; i < spec.trials; ++i) {
    CheckReport part;
    part.trials = 1;
    detail::Trial<C> t(c, spec, i, part);
    auto primary = [&]() -> MorphismOf<C> {
      if (!pool.empty()) return pool[i % pool.size()];
      const std::size_t a = t.arity();
      return t.gen(a, t.arity());
    };
    try {
      switch (spec.suite) {
        case Suite::rd: detail::rd_trial(t, primary()); break;
        case Suite::cdc: {
          const auto D = detail::forward_for(c, spec.derived);
          detail::cdc_trial(t, primary(), D, spec.derived);
          break;
        }
        case Suite::lemmas: detail::lemma_trial(t, primary()); break;
        case Suite::dagger: detail::dagger_trial(t); break;
        case Suite::roundtrip: detail::roundtrip_trial(t, primary()); break;
        case Suite::fibration: detail::fibration_trial(t, primary()); break;
      }
    } catch (const std::exception& e) {
      // Generation itself failed; count it against the suite rather than abort.
      auto& tally = part.tally("trial setup");
      ++tally.fail;
      tally.counterexample = Counterexample{i, {}, "", "", std::string("exception: ") + e.what()};
    }
    report.merge(part);
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace rdcat
