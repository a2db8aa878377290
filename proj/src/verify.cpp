#include "fpselberg/verify.hpp"

#include "fpselberg/closed2d.hpp"
#include "fpselberg/errors.hpp"
#include "fpselberg/morris.hpp"
#include "fpselberg/parallel.hpp"
#include "fpselberg/selberg.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace fpselberg {

namespace {

constexpr std::size_t kMaxCounterexamplesPerSuite = 1000;

struct Tally {
  std::uint64_t checked = 0, passed = 0, failed = 0, skipped = 0;
  std::vector<Counterexample> counterexamples;

  void pass() {
    ++checked;
    ++passed;
  }
  void fail(Counterexample ce) {
    ++checked;
    ++failed;
    if (counterexamples.size() < kMaxCounterexamplesPerSuite)
      counterexamples.push_back(std::move(ce));
  }
  template <class MakeCe>
  void check(bool ok, MakeCe&& make) {
    if (ok) pass();
    else fail(make());
  }
  void skip() { ++skipped; }

  Tally& operator+=(Tally&& o) {
    checked += o.checked;
    passed += o.passed;
    failed += o.failed;
    skipped += o.skipped;
    for (auto& ce : o.counterexamples)
      if (counterexamples.size() < kMaxCounterexamplesPerSuite)
        counterexamples.push_back(std::move(ce));
    return *this;
  }
};

std::string str(Fp x) { return std::to_string(x.v); }

Counterexample make_ce(Suite suite, std::uint32_t p, std::int64_t a, std::int64_t b,
                       std::int64_t c, std::uint32_t l1, std::uint32_t l2, std::string branch,
                       std::string expected, std::string got, std::string detail) {
  return {std::string(to_string(suite)), p, a, b, c, l1, l2, std::move(branch),
          std::move(expected), std::move(got), std::move(detail)};
}

// Fan out over (p, a) and merge per-item tallies in order.
Tally over_prime_and_a(const SweepConfig& config, const std::vector<std::uint32_t>& primes,
                       const std::function<void(const FpContext&, std::uint32_t, Tally&)>& body) {
  struct Item {
    std::size_t ctx;
    std::uint32_t a;
  };
  std::vector<FpContext> contexts;
  std::vector<Item> items;
  for (auto p : primes) {
    contexts.emplace_back(p);
    for (std::uint32_t a = 1; a < p; ++a) items.push_back({contexts.size() - 1, a});
  }
  std::vector<Tally> parts(items.size());
  parallel_for(items.size(), config.jobs,
               [&](std::size_t i) { body(contexts[items[i].ctx], items[i].a, parts[i]); });
  Tally total;
  for (auto& t : parts) total += std::move(t);
  return total;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> cycles_up_to(std::uint32_t bound) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t l1 = 1; l1 <= bound; ++l1)
    for (std::uint32_t l2 = l1; l2 <= bound; ++l2) out.emplace_back(l1, l2);
  return out;
}

// --- golden ---------------------------------------------------------------

Tally run_golden(const SweepConfig&, std::vector<GoldenRecord>& records) {
  Tally t;
  const FpContext ctx(7);
  for (GoldenRecord g : golden_examples()) {
    const SelbergParams params(g.p, g.a, g.b, g.c);
    g.bruteforce = selberg_bruteforce(ctx, MasterPolySpec(2, params), Cycle{g.l1, g.l2}).v;
    g.closed = eval_closed(ctx, params, g.l1, g.l2).v;
    t.check(g.bruteforce == g.oracle && g.closed == g.oracle, [&] {
      return make_ce(Suite::Golden, g.p, g.a, g.b, g.c, g.l1, g.l2,
                     std::string(to_string(classify(params, g.l1, g.l2).branch)),
                     std::to_string(g.oracle),
                     std::to_string(g.bruteforce) + "/" + std::to_string(g.closed),
                     "bruteforce/closed");
    });
    records.push_back(g);
  }
  return t;
}

// --- foundations ------------------------------------------------------------

Tally run_foundations(const SweepConfig& config) {
  Tally t;
  for (auto p : config.primes) {
    const FpContext ctx(p);
    const std::int64_t P = p;
    t.check(ctx.factorial(P - 1).v == p - 1, [&] {
      return make_ce(Suite::Foundations, p, 0, 0, 0, 0, 0, "", std::to_string(p - 1),
                     str(ctx.factorial(P - 1)), "Wilson: (p-1)! = -1");
    });
    for (std::int64_t a = 0; a <= P - 1; ++a) {
      const std::int64_t b = P - 1 - a;
      const Fp got = ctx.mul(ctx.factorial(a), ctx.factorial(b));
      const Fp want = ctx.sign(a + 1);
      t.check(got == want, [&] {
        return make_ce(Suite::Foundations, p, a, b, 0, 0, 0, "", str(want), str(got),
                       "a! b! = (-1)^{a+1} for a+b = p-1");
      });
    }
    for (std::int64_t a = 1; a < P; ++a) {
      for (std::int64_t b = 1; b < P; ++b) {
        if (a + b < P) continue;
        const Fp rhs = FactorialRatio{(a + 1) % 2 == 0 ? 1 : -1, {a, b}, {a + b - P}}.evaluate(ctx);
        const Fp lhs1 = ctx.mul(ctx.from_int(b), ctx.binomial_lucas(b - 1, a + b - P));
        const Fp lhs2 = ctx.mul(ctx.from_int(b), ctx.binomial_lucas(b - 1, P - a - 1));
        t.check(lhs1 == rhs && lhs2 == rhs, [&] {
          return make_ce(Suite::Foundations, p, a, b, 0, 0, 0, "", str(rhs),
                         str(lhs1) + "/" + str(lhs2), "b C(b-1, p-a-1) = (-1)^{a+1} a! b!/(a+b-p)!");
        });
      }
    }
    for (std::uint64_t n = 0; n <= 4 * std::uint64_t{p}; ++n) {
      for (std::uint64_t m = 0; m <= n; ++m) {
        const std::uint32_t want = reduce_mod(big_binomial(n, m), p);
        const Fp got = ctx.binomial_lucas(n, m);
        t.check(got.v == want, [&] {
          return make_ce(Suite::Foundations, p, static_cast<std::int64_t>(n),
                         static_cast<std::int64_t>(m), 0, 0, 0, "", std::to_string(want),
                         str(got), "Lucas binomial vs exact");
        });
      }
    }
    const FpRing ring{p};
    const auto one = FpPoly::constant(ring, 1, 1);
    const auto x = FpPoly::variable(ring, 1, 0);
    for (std::int64_t a = 0; a < P; ++a) {
      for (std::int64_t b = 0; b < P; ++b) {
        const auto integrand = FpPoly::monomial(ring, {static_cast<std::uint32_t>(a)}, 1) *
                               power(one - x, static_cast<std::uint64_t>(b));
        const Fp want = fp_integral(integrand, Cycle{1});
        const Fp got = beta_closed(ctx, a, b);
        t.check(got == want, [&] {
          return make_ce(Suite::Foundations, p, a, b, 0, 1, 0, "", str(want), str(got),
                         "beta integral vs 1-D expansion");
        });
      }
    }
  }
  return t;
}

// --- oracle equivalence -----------------------------------------------------

Tally run_oracle_equiv(const SweepConfig& config) {
  const auto cycles = cycles_up_to(config.cycle_bound);
  const bool want_bf = std::count(config.methods.begin(), config.methods.end(), Method::Bruteforce);
  return over_prime_and_a(config, config.primes, [&](const FpContext& ctx, std::uint32_t a, Tally& t) {
    const std::uint32_t p = ctx.p();
    for (std::uint32_t b = 1; b < p; ++b) {
      for (std::uint32_t c = 1; c < p; ++c) {
        const SelbergParams params(p, a, b, c);
        std::optional<FpPoly> phi;
        if (want_bf) phi = master_polynomial(MasterPolySpec(2, params), p);
        for (auto [l1, l2] : cycles) {
          std::string branch;
          std::vector<std::pair<Method, Fp>> values;
          try {
            branch = std::string(to_string(classify(params, l1, l2).branch));
            for (auto m : config.methods) {
              switch (m) {
              case Method::Bruteforce: values.emplace_back(m, fp_integral(*phi, Cycle{l1, l2})); break;
              case Method::Direct: values.emplace_back(m, selberg_direct_2d(ctx, params, l1, l2)); break;
              case Method::Closed: values.emplace_back(m, eval_closed(ctx, params, l1, l2)); break;
              }
            }
          } catch (const GuardError& e) {
            t.fail(make_ce(Suite::OracleEquiv, p, a, b, c, l1, l2, branch, "", "", e.what()));
            continue;
          }
          const bool agree = std::all_of(values.begin(), values.end(),
                                         [&](const auto& v) { return v.second == values.front().second; });
          t.check(agree, [&] {
            std::ostringstream got;
            for (const auto& [m, v] : values) got << to_string(m) << '=' << v.v << ' ';
            return make_ce(Suite::OracleEquiv, p, a, b, c, l1, l2, branch,
                           str(values.front().second), got.str(), "method disagreement");
          });
          if (phi && l1 != l2) {
            const Fp forward = fp_integral(*phi, Cycle{l1, l2});
            const Fp mirrored = fp_integral(*phi, Cycle{l2, l1});
            t.check(forward == mirrored, [&] {
              return make_ce(Suite::OracleEquiv, p, a, b, c, l1, l2, branch, str(forward),
                             str(mirrored), "swap symmetry");
            });
          }
        }
      }
    }
  });
}

// --- vanishing ----------------------------------------------------------------

Tally run_vanishing(const SweepConfig& config) {
  const auto cycles = cycles_up_to(config.cycle_bound);
  return over_prime_and_a(config, config.primes, [&](const FpContext& ctx, std::uint32_t a, Tally& t) {
    const std::uint32_t p = ctx.p();
    for (std::uint32_t b = 1; b < p; ++b) {
      for (std::uint32_t c = 1; c < p; ++c) {
        const SelbergParams params(p, a, b, c);
        const MasterPolySpec spec(2, params);
        const FpPoly phi = master_polynomial(spec, p);
        std::optional<IntPoly> exact;
        for (auto [l1, l2] : cycles) {
          const Branch branch = classify(params, l1, l2).branch;
          const std::string name(to_string(branch));
          const Fp value = fp_integral(phi, Cycle{l1, l2});
          if (is_zero_branch(branch)) {
            t.check(value.v == 0, [&] {
              return make_ce(Suite::Vanishing, p, a, b, c, l1, l2, name, "0", str(value),
                             "zero branch is non-zero");
            });
            if (config.integer_mode && asserts_integer_zero(branch)) {
              if (!exact) exact = master_polynomial_exact(spec);
              const BigInt s = cycle_coefficient(*exact, Cycle{l1, l2}, p);
              t.check(s.is_zero(), [&] {
                return make_ce(Suite::Vanishing, p, a, b, c, l1, l2, name, "0", s.str(),
                               "integer-level vanishing");
              });
            }
          }
          if (branch == Branch::C11_i || branch == Branch::C11_ii) {
            const bool nonzero_claim = 2 * c < p;
            t.check((value.v != 0) == nonzero_claim, [&] {
              return make_ce(Suite::Vanishing, p, a, b, c, l1, l2, name,
                             nonzero_claim ? "non-zero" : "0", str(value), "non-zero iff 2c < p");
            });
          }
          if (branch == Branch::C22_ii) {
            t.check(value.v != 0, [&] {
              return make_ce(Suite::Vanishing, p, a, b, c, l1, l2, name, "non-zero", str(value),
                             "C22_ii value must be non-zero");
            });
          }
        }
      }
    }
  });
}

// --- recurrences ----------------------------------------------------------------

Tally run_recurrences(const SweepConfig& config) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cycles;
  for (auto cyc : {std::pair{1u, 1u}, std::pair{1u, 2u}, std::pair{2u, 2u}, std::pair{1u, 3u}})
    if (cyc.second <= config.cycle_bound) cycles.push_back(cyc);

  return over_prime_and_a(config, config.primes, [&](const FpContext& ctx, std::uint32_t a, Tally& t) {
    const std::uint32_t p = ctx.p();
    auto S = [&](std::uint32_t aa, std::uint32_t bb, std::uint32_t cc, const Cycle& cyc) {
      return selberg_bruteforce(ctx, MasterPolySpec(2, aa, bb, cc), cyc);
    };
    auto F = [&](std::int64_t v) { return ctx.from_int(v); };
    for (std::uint32_t b = 1; b < p; ++b) {
      for (std::uint32_t c = 1; c < p; ++c) {
        const SelbergParams params(p, a, b, c);
        const std::int64_t A = a, B = b, C = c;
        for (auto [l1, l2] : cycles) {
          const Cycle cyc{l1, l2};
          const Fp s = S(a, b, c, cyc);
          const Fp s1 = moment_integral(ctx, params, cyc, MomentKind::S1);
          const Fp s2 = moment_integral(ctx, params, cyc, MomentKind::S2);
          auto report = [&](const char* which, Fp lhs, Fp rhs) {
            t.check(lhs == rhs, [&] {
              return make_ce(Suite::Recurrences, p, a, b, c, l1, l2, "", str(lhs), str(rhs), which);
            });
          };
          report("2(a+c+1) S = (a+b+2c+2) S1", ctx.mul(F(2 * (A + C + 1)), s),
                 ctx.mul(F(A + B + 2 * C + 2), s1));
          report("2(b+c+1) S = (a+b+2c+2) S2", ctx.mul(F(2 * (B + C + 1)), s),
                 ctx.mul(F(A + B + 2 * C + 2), s2));
          if (a + 1 < p)
            report("(a+1) S1 = 2(a+b+c+2) S(a+1)", ctx.mul(F(A + 1), s1),
                   ctx.mul(F(2 * (A + B + C + 2)), S(a + 1, b, c, cyc)));
          else
            t.skip();
          if (b + 1 < p)
            report("(b+1) S2 = 2(a+b+c+2) S(b+1)", ctx.mul(F(B + 1), s2),
                   ctx.mul(F(2 * (A + B + C + 2)), S(a, b + 1, c, cyc)));
          else
            t.skip();

          const Fp den = ctx.mul(F(A + B + C + 1), F(A + B + 2 * C + 1));
          if (den.v != 0 && a >= 2)
            report("S = S(a-1) a(a+c)/((a+b+c+1)(a+b+2c+1))", s,
                   ctx.div(ctx.mul(S(a - 1, b, c, cyc), F(A * (A + C))), den));
          else
            t.skip();
          if (den.v != 0 && b >= 2)
            report("S = S(b-1) b(b+c)/((a+b+c+1)(a+b+2c+1))", s,
                   ctx.div(ctx.mul(S(a, b - 1, c, cyc), F(B * (B + C))), den));
          else
            t.skip();
        }
      }
    }
  });
}

// --- relations ----------------------------------------------------------------

Tally run_relations(const SweepConfig& config) {
  return over_prime_and_a(config, config.primes, [&](const FpContext& ctx, std::uint32_t a, Tally& t) {
    const std::uint32_t p = ctx.p();
    for (std::uint32_t b = 1; b < p; ++b) {
      for (std::uint32_t c = 1; c < p; ++c) {
        const SelbergParams params(p, a, b, c);
        const RelationReport r = relations_check(ctx, params, config.cycle_bound);
        t.check(r.ok(), [&] {
          std::ostringstream got;
          got << "values=" << r.values[0] << ',' << r.values[1] << ',' << r.values[2]
              << " nonzero_pairs=" << r.nonzero_pairs.size();
          return make_ce(Suite::Relations, p, a, b, c, 0, 0, std::string(to_string(r.condition_set)),
                         "relation", got.str(),
                         r.condition_set == ConditionSet::None ? "uniqueness" : "relation/anchor/nonzero set");
        });
        if (r.condition_set == ConditionSet::R3) {
          t.check(skew_symmetry_check(ctx, params), [&] {
            return make_ce(Suite::Relations, p, a, b, c, 0, 0, "R3", "true", "false",
                           "skew-symmetric coefficient identities");
          });
        }
      }
    }
  });
}

// --- Morris -------------------------------------------------------------------

Tally run_morris(const SweepConfig& config) {
  std::vector<MorrisParams> grid;
  for (std::uint32_t n = 1; n <= 3; ++n)
    for (std::uint32_t al = 0; al <= 3; ++al)
      for (std::uint32_t be = 0; be <= 3; ++be)
        for (std::uint32_t ga = 0; ga <= 3; ++ga) grid.push_back({n, al, be, ga});

  std::vector<Tally> parts(grid.size());
  parallel_for(grid.size(), config.jobs, [&](std::size_t i) {
    const MorrisParams& mp = grid[i];
    const BigInt ct = morris_ct_bruteforce(mp);
    const BigInt rhs = morris_rhs(mp);
    const BigInt sym = morris_lhs_symmetric_form(mp);
    parts[i].check(ct == rhs, [&] {
      return make_ce(Suite::Morris, 0, mp.alpha, mp.beta, mp.gamma, mp.n, 0, "", rhs.str(),
                     ct.str(), "constant term vs product (a,b,c = alpha,beta,gamma; l1 = n)");
    });
    parts[i].check(sym == ct, [&] {
      return make_ce(Suite::Morris, 0, mp.alpha, mp.beta, mp.gamma, mp.n, 0, "", ct.str(),
                     sym.str(), "symmetric form vs constant term");
    });
  });
  Tally t;
  for (auto& part : parts) t += std::move(part);

  std::vector<std::uint32_t> bridge_primes;
  for (auto p : config.primes)
    if (p <= 7) bridge_primes.push_back(p);
  t += over_prime_and_a(config, bridge_primes, [&](const FpContext& ctx, std::uint32_t a, Tally& part) {
    const std::uint32_t p = ctx.p();
    for (std::uint32_t b = 1; b < p; ++b) {
      for (std::uint32_t c = 1; c < p; ++c) {
        const SelbergParams params(p, a, b, c);
        const MasterPolySpec spec(2, params);
        for (auto [l, mp] : {std::pair{1u, morris_params_cycle11(params)},
                             std::pair{2u, morris_params_cycle22(params)}}) {
          if (!mp) continue;
          const BigInt via_morris = selberg_from_morris(params, *mp);
          const BigInt exact = selberg_bruteforce_exact(spec, Cycle{l, l}, p);
          const Fp reduced = selberg_bruteforce(ctx, spec, Cycle{l, l});
          part.check(via_morris == exact && reduce_mod(via_morris, p) == reduced.v, [&] {
            return make_ce(Suite::Morris, p, a, b, c, l, l, "", exact.str(), via_morris.str(),
                           "Morris bridge");
          });
        }
      }
    }
  });
  return t;
}

// --- Stokes ---------------------------------------------------------------------

Tally run_stokes(const SweepConfig& config) {
  Tally t;
  std::mt19937_64 rng(config.seed);
  auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = config.primes[uniform(0, config.primes.size() - 1)];
    const std::size_t nvars = uniform(1, 2);
    FpPoly poly(FpRing{p}, nvars);
    const auto nterms = uniform(1, 12);
    for (std::uint64_t k = 0; k < nterms; ++k) {
      Exponents e(nvars);
      for (auto& d : e) d = static_cast<std::uint32_t>(uniform(0, 3 * p - 1));
      poly.add_term(e, static_cast<std::uint32_t>(uniform(1, p - 1)));
    }
    std::vector<std::uint32_t> l(nvars);
    for (auto& v : l) v = static_cast<std::uint32_t>(uniform(1, 3));
    const Cycle cycle(l);
    for (std::size_t i = 0; i < nvars; ++i) {
      const Fp v = fp_integral(partial_derivative(poly, i), cycle);
      t.check(v.v == 0, [&] {
        return make_ce(Suite::Stokes, p, trial, static_cast<std::int64_t>(i), 0, l[0],
                       nvars > 1 ? l[1] : 0, "", "0", str(v), "integral of a derivative");
      });
    }
  }
  return t;
}

// --- n-dimensional ----------------------------------------------------------------

Tally run_nd(const SweepConfig& config) {
  Tally t;
  for (auto p : config.primes) {
    const FpContext ctx(p);
    const std::int64_t P = p;
    for (std::int64_t a = 0; a < P; ++a)
      for (std::int64_t b = 0; b < P; ++b) {
        if (a + b < P - 1) continue;
        const Fp nd = selberg_nd_closed(ctx, 1, a, b, 0);
        const Fp beta = beta_closed(ctx, a, b);
        t.check(nd == beta, [&] {
          return make_ce(Suite::Nd, p, a, b, 0, 1, 0, "n=1", str(beta), str(nd), "n=1 vs beta");
        });
      }
    for (std::int64_t a = 1; a < P; ++a)
      for (std::int64_t b = 1; b < P; ++b)
        for (std::int64_t c = 1; c < P; ++c) {
          if (!(P - 1 <= a + b + c && a + b + 2 * c < 2 * P - 1)) continue;
          const SelbergParams params(p, a, b, c);
          const ClosedForm form = closed_form(params, 1, 1);
          if (form.tag.branch != Branch::C11_i) continue;
          const Fp nd = selberg_nd_closed(ctx, 2, a, b, c);
          const Fp c11 = form.formula->evaluate(ctx);
          t.check(nd == c11, [&] {
            return make_ce(Suite::Nd, p, a, b, c, 1, 1, "C11_i", str(c11), str(nd),
                           "n=2 vs [1,1] formula (i)");
          });
        }
  }

  struct Item {
    std::uint32_t p, a, b, c;
    std::size_t n;
  };
  std::vector<Item> items;
  for (auto p : config.primes) {
    for (std::size_t n : {2, 3}) {
      const std::int64_t P = p, N = static_cast<std::int64_t>(n);
      for (std::int64_t a = 0; a < P; ++a)
        for (std::int64_t b = 0; b < P; ++b)
          for (std::int64_t c = 0; c < P; ++c) {
            if (!(P - 1 <= a + b + (N - 1) * c && a + b + (2 * N - 2) * c < 2 * P - 1)) continue;
            items.push_back({p, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                             static_cast<std::uint32_t>(c), n});
          }
    }
  }
  std::vector<Tally> parts(items.size());
  std::map<std::uint32_t, FpContext> contexts;
  for (auto p : config.primes) contexts.emplace(p, FpContext(p));
  parallel_for(items.size(), config.jobs, [&](std::size_t i) {
    const Item& it = items[i];
    const FpContext& ctx = contexts.at(it.p);
    try {
      check_bruteforce_budget(it.n, it.p);
    } catch (const ResourceError&) {
      parts[i].skip();
      return;
    }
    const Fp closed = selberg_nd_closed(ctx, it.n, it.a, it.b, it.c);
    const Fp brute = selberg_bruteforce(ctx, MasterPolySpec(it.n, it.a, it.b, it.c),
                                        Cycle(std::vector<std::uint32_t>(it.n, 1)));
    parts[i].check(closed == brute, [&] {
      return make_ce(Suite::Nd, it.p, it.a, it.b, it.c, 1, 1, "n=" + std::to_string(it.n),
                     str(brute), str(closed), "product formula vs brute force on [1,...,1]");
    });
  });
  for (auto& part : parts) t += std::move(part);
  return t;
}

} // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
  case Suite::Golden: return "golden";
  case Suite::Foundations: return "foundations";
  case Suite::OracleEquiv: return "oracle_equiv";
  case Suite::Vanishing: return "vanishing";
  case Suite::Recurrences: return "recurrences";
  case Suite::Relations: return "relations";
  case Suite::Morris: return "morris";
  case Suite::Stokes: return "stokes";
  case Suite::Nd: return "nd";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::Golden,      Suite::Foundations, Suite::OracleEquiv,
          Suite::Vanishing,   Suite::Recurrences, Suite::Relations,
          Suite::Morris,      Suite::Stokes,      Suite::Nd};
}

Suite parse_suite(std::string_view name) {
  for (auto s : all_suites())
    if (to_string(s) == name) return s;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

void validate(const SweepConfig& config) {
  if (config.primes.empty()) throw DomainError("prime list is empty");
  for (auto p : config.primes)
    if (p == 2 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (config.cycle_bound == 0) throw DomainError("cycle bound must be at least 1");
  if (config.suites.empty() && config.methods.empty())
    throw DomainError("select at least one suite or method");
  if (config.jobs == 0) throw DomainError("jobs must be at least 1");
}

const std::vector<GoldenRecord>& golden_examples() {
  // oracle: independent brute-force values; paper_value: as printed.
  static const std::vector<GoldenRecord> records = {
      {7, 3, 4, 3, 1, 1, 1, 0, 0, 1, false},
      {7, 6, 6, 3, 2, 2, 5, 0, 0, 2, true},
      {7, 6, 6, 6, 2, 2, 5, 0, 0, 5, false},
  };
  return records;
}

std::uint64_t VerificationReport::total_failed() const {
  std::uint64_t f = 0;
  for (const auto& s : suites) f += s.failed;
  return f;
}

VerificationReport run_verification(const SweepConfig& config) {
  validate(config);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  VerificationReport report;
  std::vector<Suite> suites = config.suites.empty() ? std::vector<Suite>{Suite::OracleEquiv}
                                                    : config.suites;
  for (Suite suite : suites) {
    const auto t0 = Clock::now();
    Tally t;
    switch (suite) {
    case Suite::Golden: t = run_golden(config, report.golden); break;
    case Suite::Foundations: t = run_foundations(config); break;
    case Suite::OracleEquiv: t = run_oracle_equiv(config); break;
    case Suite::Vanishing: t = run_vanishing(config); break;
    case Suite::Recurrences: t = run_recurrences(config); break;
    case Suite::Relations: t = run_relations(config); break;
    case Suite::Morris: t = run_morris(config); break;
    case Suite::Stokes: t = run_stokes(config); break;
    case Suite::Nd: t = run_nd(config); break;
    }
    SuiteResult r{suite, t.checked, t.passed, t.failed, t.skipped,
                  std::chrono::duration<double>(Clock::now() - t0).count()};
    report.suites.push_back(r);
    for (auto& ce : t.counterexamples) report.counterexamples.push_back(std::move(ce));
  }
  report.total_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

} // namespace fpselberg
