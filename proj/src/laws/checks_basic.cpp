#include "laws/laws.hpp"
#include "laws/laws_internal.hpp"

namespace conceptory::laws {

using detail::Ctx;
using detail::Recorder;

namespace {

/// Supersets of `base` within the universe, ascending in the added bits.
template <class F>
void for_each_supermask(uint32_t base, uint32_t umask, F&& body) {
  for_each_submask(umask & ~base, [&](uint32_t extra) { body(base | extra); });
}

Subset sub(const Ctx& ctx, uint32_t bits) { return Subset{ctx.u.size, bits}; }

}  // namespace

// Units, associativity and the preorder structure of leq. Not a displayed
// law of its own, but everything else silently assumes it.
LawResult check_category(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("category", true);
  Universe u = make_universe(cfg.universe_size);

  if (cfg.mode == Mode::exhaustive) {
    Ctx ctx(u);
    for (const Cell1& f : ctx.cells) {
      rec.tally();
      bool ok = leq(f, f) && compose(identity(f.cod_set()), f) == f &&
                compose(f, identity(f.dom_set())) == f;
      if (!ok) {
        rec.fail(detail::make_violation("identity/reflexivity", {{"f", f}}, {}));
      }
    }
    if (u.size <= 2) {
      for (const Cell1& f : ctx.cells) {
        for (const Cell1& g : ctx.cells) {
          if (!leq(f, g)) continue;
          for (const Cell1& h : ctx.cells) {
            if (!leq(g, h)) continue;
            rec.tally();
            if (!leq(f, h)) {
              rec.fail(detail::make_violation("transitivity",
                                              {{"f", f}, {"g", g}, {"h", h}}, {}));
            }
          }
        }
      }
      for (uint32_t mid1 = 0; mid1 <= u.mask(); ++mid1) {
        for (const Cell1* f : ctx.by_cod[mid1]) {
          for (const Cell1* g : ctx.by_dom[mid1]) {
            uint32_t mid2 = g->cod;
            Cell1 gf = compose(*g, *f);
            for (const Cell1* h : ctx.by_dom[mid2]) {
              rec.tally();
              if (!(compose(*h, gf) == compose(compose(*h, *g), *f))) {
                rec.fail(detail::make_violation(
                    "associativity", {{"f", *f}, {"g", *g}, {"h", *h}}, {}));
              }
            }
          }
        }
      }
      rec.note("cell tuples");
    } else {
      // Composite pair sets and leq never look at boundaries, so at n=3 the
      // associativity/transitivity instances are enumerated by pair set;
      // the boundary bookkeeping is covered by a representative sweep.
      DenseContext d(u);
      for (uint32_t t = 0; t <= d.full(); ++t) {
        for_each_submask(t, [&](uint32_t s) {
          for_each_submask(s, [&](uint32_t r) {
            rec.tally();
            if (!DenseContext::included(r, t)) {
              rec.fail(detail::make_violation("transitivity",
                                              {{"f", d.cell_of(r)},
                                               {"g", d.cell_of(s)},
                                               {"h", d.cell_of(t)}},
                                              {}));
            }
          });
        });
      }
      for (uint32_t rf = 0; rf <= d.full(); ++rf) {
        for (uint32_t rg = 0; rg <= d.full(); ++rg) {
          uint16_t gf = d.compose(rg, rf);
          uint16_t fg = d.compose(rf, rg);
          for (uint32_t rh = 0; rh <= d.full(); ++rh) {
            rec.tally();
            if (d.compose(rh, gf) != d.compose(d.compose(rh, rg), rf) ||
                d.compose(fg, rh) != d.compose(rf, d.compose(rg, rh))) {
              rec.fail(detail::make_violation("associativity",
                                              {{"f", d.cell_of(rf)},
                                               {"g", d.cell_of(rg)},
                                               {"h", d.cell_of(rh)}},
                                              {}));
            }
          }
        }
      }
      // Boundary propagation of composites over all boundary chains.
      for (uint32_t a = 0; a <= u.mask(); ++a) {
        for (uint32_t b = 0; b <= u.mask(); ++b) {
          for (uint32_t c = 0; c <= u.mask(); ++c) {
            for (uint32_t e = 0; e <= u.mask(); ++e) {
              rec.tally();
              Cell1 f = make_cell(sub(ctx, a), sub(ctx, b), {});
              Cell1 g = make_cell(sub(ctx, b), sub(ctx, c), {});
              Cell1 h = make_cell(sub(ctx, c), sub(ctx, e), {});
              Cell1 lhs = compose(h, compose(g, f));
              Cell1 rhs = compose(compose(h, g), f);
              if (!(lhs == rhs) || lhs.dom != a || lhs.cod != e) {
                rec.fail(detail::make_violation(
                    "composite boundaries", {{"f", f}, {"g", g}, {"h", h}}, {}));
              }
            }
          }
        }
      }
      rec.note("pair sets (boundary-independent parts) + boundary chains");
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "category"));
    for (long i = 0; i < cfg.samples; ++i) {
      Subset a = rng.subset(u), b = rng.subset(u), c = rng.subset(u),
             e = rng.subset(u);
      Cell1 f = rng.cell_between(a, b);
      Cell1 g = rng.cell_between(b, c);
      Cell1 h = rng.cell_between(c, e);
      Cell1 t = rng.cell(u);
      Cell1 s = rng.subcell_of(t);
      Cell1 r = rng.subcell_of(s);
      rec.tally();
      bool ok = compose(h, compose(g, f)) == compose(compose(h, g), f) &&
                compose(f, identity(a)) == f &&
                compose(identity(b), f) == f && leq(t, t) && leq(r, t);
      if (!ok) {
        rec.fail(detail::make_violation(
            "category structure",
            {{"f", f}, {"g", g}, {"h", h}, {"t", t}, {"s", s}, {"r", r}}, {}));
      }
    }
  }
  return rec.finish();
}

// Interchange in the thin model: whenever f1 <= h1, f2 <= h2 and both
// composites are defined, f2 o f1 <= h2 o h1.
LawResult check_interchange(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("interchange", true);
  Universe u = make_universe(cfg.universe_size);

  if (cfg.mode == Mode::exhaustive) {
    if (u.size <= 2) {
      Ctx ctx(u);
      for (uint32_t mid1 = 0; mid1 <= u.mask(); ++mid1) {
        for (const Cell1* f1 : ctx.by_cod[mid1]) {
          for (const Cell1* f2 : ctx.by_dom[mid1]) {
            Cell1 ff = compose(*f2, *f1);
            for (uint32_t mid2 = 0; mid2 <= u.mask(); ++mid2) {
              for (const Cell1* h1 : ctx.by_cod[mid2]) {
                if (!leq(*f1, *h1)) continue;
                for (const Cell1* h2 : ctx.by_dom[mid2]) {
                  if (!leq(*f2, *h2)) continue;
                  rec.tally();
                  if (!leq(ff, compose(*h2, *h1))) {
                    rec.fail(detail::make_violation(
                        "monotone composition",
                        {{"f1", *f1}, {"f2", *f2}, {"h1", *h1}, {"h2", *h2}},
                        {}));
                  }
                }
              }
            }
          }
        }
      }
      rec.note("composable cell quadruples");
    } else {
      // Composition and leq are boundary-blind, so the instance space is
      // exactly the pair-set quadruples r1 <= s1, r2 <= s2.
      DenseContext d(u);
      for (uint32_t s1 = 0; s1 <= d.full(); ++s1) {
        for (uint32_t s2 = 0; s2 <= d.full(); ++s2) {
          uint16_t ss = d.compose(s2, s1);
          for_each_submask(s1, [&](uint32_t r1) {
            for_each_submask(s2, [&](uint32_t r2) {
              rec.tally();
              if (!DenseContext::included(d.compose(r2, r1), ss)) {
                rec.fail(detail::make_violation("monotone composition",
                                                {{"f1", d.cell_of(r1)},
                                                 {"f2", d.cell_of(r2)},
                                                 {"h1", d.cell_of(s1)},
                                                 {"h2", d.cell_of(s2)}},
                                                {}));
              }
            });
          });
        }
      }
      rec.note("pair-set quadruples (composition is boundary-independent)");
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "interchange"));
    for (long i = 0; i < cfg.samples; ++i) {
      Subset a = rng.subset(u), b = rng.subset(u), c = rng.subset(u);
      Cell1 f1 = rng.cell_between(a, b);
      Cell1 f2 = rng.cell_between(b, c);
      Subset b2{u.size, rng.superset_of(Subset{u.size, detail::col_support(f1) |
                                                           detail::row_support(f2)})
                            .bits};
      Subset a2 = rng.superset_of(Subset{u.size, detail::row_support(f1)});
      Subset c2 = rng.superset_of(Subset{u.size, detail::col_support(f2)});
      Cell1 h1 = rng.cell_between(a2, b2);
      Cell1 h2 = rng.cell_between(b2, c2);
      for (int r = 0; r < u.size; ++r) {
        h1.rows[r] |= f1.rows[r];
        h2.rows[r] |= f2.rows[r];
      }
      rec.tally();
      if (!leq(compose(f2, f1), compose(h2, h1))) {
        rec.fail(detail::make_violation(
            "monotone composition",
            {{"f1", f1}, {"f2", f2}, {"h1", h1}, {"h2", h2}}, {}));
      }
    }
  }
  return rec.finish();
}

// Universality of restriction: every g' at the smaller boundaries that sits
// under f factors through the restriction of f.
LawResult check_restriction_universality(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("restriction_universality", true);
  Universe u = make_universe(cfg.universe_size);

  if (cfg.mode == Mode::exhaustive) {
    Ctx ctx(u);
    for (const Cell1& f : ctx.cells) {
      for_each_submask(f.dom, [&](uint32_t a2) {
        for_each_submask(f.cod, [&](uint32_t b2) {
          Cell1 rf = restrict_cell(f, sub(ctx, a2), sub(ctx, b2));
          for (const Cell1& gp : cells_between(sub(ctx, a2), sub(ctx, b2))) {
            if (!leq(gp, f)) continue;
            rec.tally();
            if (!leq(gp, rf)) {
              rec.fail(detail::make_violation(
                  "universal factoring", {{"f", f}, {"gp", gp}},
                  {{"A2", sub(ctx, a2)}, {"B2", sub(ctx, b2)}}));
            }
          }
        });
      });
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "restriction_universality"));
    for (long i = 0; i < cfg.samples; ++i) {
      Cell1 f = rng.cell(u);
      Subset a2 = rng.subset_of(f.dom_set());
      Subset b2 = rng.subset_of(f.cod_set());
      Cell1 gp;
      gp.n = u.size;
      gp.dom = a2.bits;
      gp.cod = b2.bits;
      for (int r = 0; r < u.size; ++r) {
        if (a2.contains(r)) {
          gp.rows[r] = static_cast<uint16_t>(rng.submask(f.rows[r] & b2.bits));
        }
      }
      rec.tally();
      if (!leq(gp, restrict_cell(f, a2, b2))) {
        rec.fail(detail::make_violation("universal factoring",
                                        {{"f", f}, {"gp", gp}},
                                        {{"A2", a2}, {"B2", b2}}));
      }
    }
  }
  return rec.finish();
}

// Universality of extension, dually.
LawResult check_extension_universality(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("extension_universality", true);
  Universe u = make_universe(cfg.universe_size);

  if (cfg.mode == Mode::exhaustive) {
    Ctx ctx(u);
    for (const Cell1& f : ctx.cells) {
      for_each_supermask(f.dom, u.mask(), [&](uint32_t a3) {
        for_each_supermask(f.cod, u.mask(), [&](uint32_t b3) {
          Cell1 ef = extend_cell(f, sub(ctx, a3), sub(ctx, b3));
          for (const Cell1& gp : cells_between(sub(ctx, a3), sub(ctx, b3))) {
            if (!leq(f, gp)) continue;
            rec.tally();
            if (!leq(ef, gp)) {
              rec.fail(detail::make_violation(
                  "universal factoring", {{"f", f}, {"gp", gp}},
                  {{"A3", sub(ctx, a3)}, {"B3", sub(ctx, b3)}}));
            }
          }
        });
      });
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "extension_universality"));
    for (long i = 0; i < cfg.samples; ++i) {
      Cell1 f = rng.cell(u);
      Subset a3 = rng.superset_of(f.dom_set());
      Subset b3 = rng.superset_of(f.cod_set());
      Cell1 gp;
      gp.n = u.size;
      gp.dom = a3.bits;
      gp.cod = b3.bits;
      for (int r = 0; r < u.size; ++r) {
        if (a3.contains(r)) {
          gp.rows[r] = static_cast<uint16_t>(f.rows[r] | rng.submask(b3.bits));
        }
      }
      rec.tally();
      if (!leq(extend_cell(f, a3, b3), gp)) {
        rec.fail(detail::make_violation("universal factoring",
                                        {{"f", f}, {"gp", gp}},
                                        {{"A3", a3}, {"B3", b3}}));
      }
    }
  }
  return rec.finish();
}

// The absorption equations defining the 2-cell subcategory that the
// universal restriction/extension arrows live in: whiskering the canonical
// arrow with the identity 2-cells on either side reproduces it exactly.
LawResult check_absorption(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("absorption", true);
  Universe u = make_universe(cfg.universe_size);

  auto down_case = [&](const Cell1& f, const Subset& a2, const Subset& b2) {
    rec.tally();
    try {
      TwoCell gamma(restrict_cell(f, a2, b2), f);
      TwoCell alpha(identity(a2), identity(f.dom_set()));
      TwoCell beta(identity(b2), identity(f.cod_set()));
      if (!(detail::hcompose(gamma, alpha) == gamma) ||
          !(detail::hcompose(beta, gamma) == gamma)) {
        rec.fail(detail::make_violation("restriction arrow not absorbed",
                                        {{"f", f}}, {{"A2", a2}, {"B2", b2}}));
      }
    } catch (const Error& e) {
      rec.fail(detail::make_violation(e.what(), {{"f", f}},
                                      {{"A2", a2}, {"B2", b2}}));
    }
  };
  auto up_case = [&](const Cell1& f, const Subset& a3, const Subset& b3) {
    rec.tally();
    try {
      TwoCell gamma(f, extend_cell(f, a3, b3));
      TwoCell alpha(identity(f.dom_set()), identity(a3));
      TwoCell beta(identity(f.cod_set()), identity(b3));
      if (!(detail::hcompose(gamma, alpha) == gamma) ||
          !(detail::hcompose(beta, gamma) == gamma)) {
        rec.fail(detail::make_violation("extension arrow not absorbed",
                                        {{"f", f}}, {{"A3", a3}, {"B3", b3}}));
      }
    } catch (const Error& e) {
      rec.fail(detail::make_violation(e.what(), {{"f", f}},
                                      {{"A3", a3}, {"B3", b3}}));
    }
  };

  if (cfg.mode == Mode::exhaustive) {
    Ctx ctx(u);
    for (const Cell1& f : ctx.cells) {
      for_each_submask(f.dom, [&](uint32_t a2) {
        for_each_submask(f.cod, [&](uint32_t b2) {
          down_case(f, sub(ctx, a2), sub(ctx, b2));
        });
      });
      for_each_supermask(f.dom, u.mask(), [&](uint32_t a3) {
        for_each_supermask(f.cod, u.mask(), [&](uint32_t b3) {
          up_case(f, sub(ctx, a3), sub(ctx, b3));
        });
      });
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "absorption"));
    for (long i = 0; i < cfg.samples; ++i) {
      Cell1 f = rng.cell(u);
      down_case(f, rng.subset_of(f.dom_set()), rng.subset_of(f.cod_set()));
      up_case(f, rng.superset_of(f.dom_set()), rng.superset_of(f.cod_set()));
    }
  }
  return rec.finish();
}

// Exact distributivity of restriction/extension over composition: the
// one-sided restrictions of the factors compose to the two-sided
// restriction of the composite, as cell equality.
LawResult check_distrib(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("distrib", true);
  Universe u = make_universe(cfg.universe_size);

  auto check_down = [&](const Cell1& f, const Cell1& g, const Subset& a2,
                        const Subset& c2, const Cell1& fg) {
    rec.tally();
    if (!(compose(restrict_cod(f, c2), restrict_dom(g, a2)) ==
          restrict_cell(fg, a2, c2))) {
      rec.fail(detail::make_violation("restriction distributes",
                                      {{"f", f}, {"g", g}},
                                      {{"A2", a2}, {"C2", c2}}));
    }
  };
  auto check_up = [&](const Cell1& f, const Cell1& g, const Subset& a3,
                      const Subset& c3, const Cell1& fg) {
    rec.tally();
    if (!(compose(extend_cod(f, c3), extend_dom(g, a3)) ==
          extend_cell(fg, a3, c3))) {
      rec.fail(detail::make_violation("extension distributes",
                                      {{"f", f}, {"g", g}},
                                      {{"A3", a3}, {"C3", c3}}));
    }
  };

  if (cfg.mode == Mode::exhaustive) {
    Ctx ctx(u);
    for (uint32_t mid = 0; mid <= u.mask(); ++mid) {
      for (const Cell1* g : ctx.by_cod[mid]) {
        for (const Cell1* f : ctx.by_dom[mid]) {
          Cell1 fg = compose(*f, *g);
          for_each_submask(g->dom, [&](uint32_t a2) {
            for_each_submask(f->cod, [&](uint32_t c2) {
              check_down(*f, *g, sub(ctx, a2), sub(ctx, c2), fg);
            });
          });
          for_each_supermask(g->dom, u.mask(), [&](uint32_t a3) {
            for_each_supermask(f->cod, u.mask(), [&](uint32_t c3) {
              check_up(*f, *g, sub(ctx, a3), sub(ctx, c3), fg);
            });
          });
        }
      }
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "distrib"));
    for (long i = 0; i < cfg.samples; ++i) {
      Subset a = rng.subset(u), b = rng.subset(u), c = rng.subset(u);
      Cell1 g = rng.cell_between(a, b);
      Cell1 f = rng.cell_between(b, c);
      Cell1 fg = compose(f, g);
      check_down(f, g, rng.subset_of(a), rng.subset_of(c), fg);
      check_up(f, g, rng.superset_of(a), rng.superset_of(c), fg);
    }
  }
  return rec.finish();
}

// Semidistributivity: composing restrictions sits under restricting the
// composite; extending the composite sits under composing extensions.
LawResult check_semidistrib(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("semidistrib", true);
  Universe u = make_universe(cfg.universe_size);

  auto check_down = [&](const Cell1& f, const Cell1& g, const Subset& a2,
                        const Subset& b2, const Subset& c2, const Cell1& gf) {
    rec.tally();
    if (!leq(compose(restrict_cell(g, b2, c2), restrict_cell(f, a2, b2)),
             restrict_cell(gf, a2, c2))) {
      rec.fail(detail::make_violation(
          "restriction semidistributivity", {{"f", f}, {"g", g}},
          {{"A2", a2}, {"B2", b2}, {"C2", c2}}));
    }
  };
  auto check_up = [&](const Cell1& f, const Cell1& g, const Subset& a3,
                      const Subset& b3, const Subset& c3, const Cell1& gf) {
    rec.tally();
    if (!leq(extend_cell(gf, a3, c3),
             compose(extend_cell(g, b3, c3), extend_cell(f, a3, b3)))) {
      rec.fail(detail::make_violation(
          "extension semidistributivity", {{"f", f}, {"g", g}},
          {{"A3", a3}, {"B3", b3}, {"C3", c3}}));
    }
  };

  if (cfg.mode == Mode::exhaustive) {
    Ctx ctx(u);
    for (uint32_t mid = 0; mid <= u.mask(); ++mid) {
      for (const Cell1* f : ctx.by_cod[mid]) {
        for (const Cell1* g : ctx.by_dom[mid]) {
          Cell1 gf = compose(*g, *f);
          for_each_submask(f->dom, [&](uint32_t a2) {
            for_each_submask(mid, [&](uint32_t b2) {
              for_each_submask(g->cod, [&](uint32_t c2) {
                check_down(*f, *g, sub(ctx, a2), sub(ctx, b2), sub(ctx, c2), gf);
              });
            });
          });
          for_each_supermask(f->dom, u.mask(), [&](uint32_t a3) {
            for_each_supermask(mid, u.mask(), [&](uint32_t b3) {
              for_each_supermask(g->cod, u.mask(), [&](uint32_t c3) {
                check_up(*f, *g, sub(ctx, a3), sub(ctx, b3), sub(ctx, c3), gf);
              });
            });
          });
        }
      }
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "semidistrib"));
    for (long i = 0; i < cfg.samples; ++i) {
      Subset a = rng.subset(u), b = rng.subset(u), c = rng.subset(u);
      Cell1 f = rng.cell_between(a, b);
      Cell1 g = rng.cell_between(b, c);
      Cell1 gf = compose(g, f);
      check_down(f, g, rng.subset_of(a), rng.subset_of(b), rng.subset_of(c), gf);
      check_up(f, g, rng.superset_of(a), rng.superset_of(b), rng.superset_of(c),
               gf);
    }
  }
  return rec.finish();
}

// Functoriality data: restriction/extension are monotone, restriction of an
// identity dominates the smaller identity, extension of it sits under the
// larger one.
LawResult check_functoriality(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("functoriality", true);
  Universe u = make_universe(cfg.universe_size);

  auto check_mono = [&](const Cell1& f, const Cell1& g, const Subset& a2,
                        const Subset& b2, const Subset& a3, const Subset& b3) {
    rec.tally();
    bool ok = leq(restrict_cell(f, a2, b2), restrict_cell(g, a2, b2)) &&
              leq(extend_cell(f, a3, b3), extend_cell(g, a3, b3));
    if (!ok) {
      rec.fail(detail::make_violation(
          "monotonicity", {{"f", f}, {"g", g}},
          {{"A2", a2}, {"B2", b2}, {"A3", a3}, {"B3", b3}}));
    }
  };
  auto check_units = [&](const Subset& a, const Subset& a2, const Subset& b3) {
    rec.tally();
    bool ok = leq(identity(a2), restrict_cell(identity(a), a2, a2)) &&
              leq(extend_cell(identity(a), b3, b3), identity(b3));
    if (!ok) {
      rec.fail(detail::make_violation("monoidal unit / comonoidal counit", {},
                                      {{"A", a}, {"A2", a2}, {"B3", b3}}));
    }
  };

  if (cfg.mode == Mode::exhaustive) {
    Ctx ctx(u);
    for (uint32_t a = 0; a <= u.mask(); ++a) {
      for (uint32_t b = 0; b <= u.mask(); ++b) {
        auto block = cells_between(sub(ctx, a), sub(ctx, b));
        for (const Cell1& g : block) {
          for (const Cell1& f : block) {
            if (!leq(f, g)) continue;
            for_each_submask(a, [&](uint32_t a2) {
              for_each_submask(b, [&](uint32_t b2) {
                for_each_supermask(a, u.mask(), [&](uint32_t a3) {
                  for_each_supermask(b, u.mask(), [&](uint32_t b3) {
                    check_mono(f, g, sub(ctx, a2), sub(ctx, b2), sub(ctx, a3),
                               sub(ctx, b3));
                  });
                });
              });
            });
          }
        }
      }
      for_each_submask(a, [&](uint32_t a2) {
        for_each_supermask(a, u.mask(), [&](uint32_t b3) {
          check_units(sub(ctx, a), sub(ctx, a2), sub(ctx, b3));
        });
      });
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "functoriality"));
    for (long i = 0; i < cfg.samples; ++i) {
      Subset a = rng.subset(u), b = rng.subset(u);
      Cell1 g = rng.cell_between(a, b);
      Cell1 f = rng.subcell_of(g);
      check_mono(f, g, rng.subset_of(a), rng.subset_of(b), rng.superset_of(a),
                 rng.superset_of(b));
      check_units(a, rng.subset_of(a), rng.superset_of(a));
    }
  }
  return rec.finish();
}

// The six derived theorems, checked semantically.
LawResult check_theorems(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec("theorems", true);
  Universe u = make_universe(cfg.universe_size);

  auto t1 = [&](const Cell1& f, const Cell1& g, const Subset& a2,
                const Subset& b2, const Subset& c2, const Cell1& gf) {
    rec.tally();
    if (!leq(compose(restrict_cell(g, b2, c2), restrict_cell(f, a2, b2)),
             restrict_cell(gf, a2, c2))) {
      rec.fail(detail::make_violation("theorem 1", {{"f", f}, {"g", g}},
                                      {{"A2", a2}, {"B2", b2}, {"C2", c2}}));
    }
  };
  auto t2 = [&](const Cell1& f, const Cell1& g, const Subset& a3,
                const Subset& b3, const Subset& c3, const Cell1& gf) {
    rec.tally();
    if (!leq(extend_cell(gf, a3, c3),
             compose(extend_cell(g, b3, c3), extend_cell(f, a3, b3)))) {
      rec.fail(detail::make_violation("theorem 2", {{"f", f}, {"g", g}},
                                      {{"A3", a3}, {"B3", b3}, {"C3", c3}}));
    }
  };
  auto t34 = [&](const Cell1& f, const Cell1& g, const Subset& a2,
                 const Subset& b2, const Subset& a3, const Subset& b3) {
    rec.tally();
    if (!leq(restrict_cell(f, a2, b2), restrict_cell(g, a2, b2))) {
      rec.fail(detail::make_violation("theorem 3", {{"f", f}, {"g", g}},
                                      {{"A2", a2}, {"B2", b2}}));
    }
    rec.tally();
    if (!leq(extend_cell(f, a3, b3), extend_cell(g, a3, b3))) {
      rec.fail(detail::make_violation("theorem 4", {{"f", f}, {"g", g}},
                                      {{"A3", a3}, {"B3", b3}}));
    }
  };
  auto t56 = [&](const Subset& a, const Subset& a2) {
    rec.tally();
    if (!leq(identity(a2), restrict_cell(identity(a), a2, a2))) {
      rec.fail(detail::make_violation("theorem 5", {}, {{"A", a}, {"A2", a2}}));
    }
    rec.tally();
    if (!leq(extend_cell(identity(a2), a, a), identity(a))) {
      rec.fail(detail::make_violation("theorem 6", {}, {{"A", a}, {"A2", a2}}));
    }
  };

  if (cfg.mode == Mode::exhaustive) {
    Ctx ctx(u);
    for (uint32_t mid = 0; mid <= u.mask(); ++mid) {
      for (const Cell1* f : ctx.by_cod[mid]) {
        for (const Cell1* g : ctx.by_dom[mid]) {
          Cell1 gf = compose(*g, *f);
          for_each_submask(f->dom, [&](uint32_t a2) {
            for_each_submask(mid, [&](uint32_t b2) {
              for_each_submask(g->cod, [&](uint32_t c2) {
                t1(*f, *g, sub(ctx, a2), sub(ctx, b2), sub(ctx, c2), gf);
              });
            });
          });
          for_each_supermask(f->dom, u.mask(), [&](uint32_t a3) {
            for_each_supermask(mid, u.mask(), [&](uint32_t b3) {
              for_each_supermask(g->cod, u.mask(), [&](uint32_t c3) {
                t2(*f, *g, sub(ctx, a3), sub(ctx, b3), sub(ctx, c3), gf);
              });
            });
          });
        }
      }
    }
    for (uint32_t a = 0; a <= u.mask(); ++a) {
      for (uint32_t b = 0; b <= u.mask(); ++b) {
        auto block = cells_between(sub(ctx, a), sub(ctx, b));
        for (const Cell1& g : block) {
          for (const Cell1& f : block) {
            if (!leq(f, g)) continue;
            for_each_submask(a, [&](uint32_t a2) {
              for_each_submask(b, [&](uint32_t b2) {
                t34(f, g, sub(ctx, a2), sub(ctx, b2), full_subset(u),
                    full_subset(u));
              });
            });
          }
        }
      }
      for_each_submask(a, [&](uint32_t a2) { t56(sub(ctx, a), sub(ctx, a2)); });
    }
  } else {
    Sampler rng(derive_seed(cfg.seed, "theorems"));
    for (long i = 0; i < cfg.samples; ++i) {
      Subset a = rng.subset(u), b = rng.subset(u), c = rng.subset(u);
      Cell1 f = rng.cell_between(a, b);
      Cell1 g = rng.cell_between(b, c);
      Cell1 gf = compose(g, f);
      t1(f, g, rng.subset_of(a), rng.subset_of(b), rng.subset_of(c), gf);
      t2(f, g, rng.superset_of(a), rng.superset_of(b), rng.superset_of(c), gf);
      Cell1 q = rng.cell_between(a, b);
      Cell1 p = rng.subcell_of(q);
      t34(p, q, rng.subset_of(a), rng.subset_of(b), rng.superset_of(a),
          rng.superset_of(b));
      t56(a, rng.subset_of(a));
    }
  }
  return rec.finish();
}

CaseStatus replay_basic(const std::string& law, const Violation& v) {
  using detail::ReplayAcc;
  const Cell1* f = v.cell("f");
  const Cell1* g = v.cell("g");
  const Cell1* h = v.cell("h");
  const Subset* a2 = v.subset("A2");
  const Subset* b2 = v.subset("B2");
  const Subset* c2 = v.subset("C2");
  const Subset* a3 = v.subset("A3");
  const Subset* b3 = v.subset("B3");
  const Subset* c3 = v.subset("C3");
  ReplayAcc acc;
  try {
    if (law == "category") {
      if (f) {
        acc.check(true, leq(*f, *f) && compose(identity(f->cod_set()), *f) == *f &&
                            compose(*f, identity(f->dom_set())) == *f);
      }
      if (f && g && h) {
        acc.check(leq(*f, *g) && leq(*g, *h), leq(*f, *h));
        if (g->dom == f->cod && h->dom == g->cod) {
          acc.check(true, compose(*h, compose(*g, *f)) ==
                              compose(compose(*h, *g), *f));
        }
      }
    } else if (law == "interchange") {
      const Cell1* f1 = v.cell("f1");
      const Cell1* f2 = v.cell("f2");
      const Cell1* h1 = v.cell("h1");
      const Cell1* h2 = v.cell("h2");
      if (!f1 || !f2 || !h1 || !h2) return CaseStatus::inapplicable;
      bool pre = f2->dom == f1->cod && h2->dom == h1->cod && leq(*f1, *h1) &&
                 leq(*f2, *h2);
      if (!pre) return CaseStatus::inapplicable;
      acc.check(true, leq(compose(*f2, *f1), compose(*h2, *h1)));
    } else if (law == "restriction_universality") {
      const Cell1* gp = v.cell("gp");
      if (!f || !gp || !a2 || !b2) return CaseStatus::inapplicable;
      bool pre = subset_leq(*a2, f->dom_set()) && subset_leq(*b2, f->cod_set()) &&
                 gp->dom == a2->bits && gp->cod == b2->bits && leq(*gp, *f);
      acc.check(pre, pre && leq(*gp, restrict_cell(*f, *a2, *b2)));
    } else if (law == "extension_universality") {
      const Cell1* gp = v.cell("gp");
      if (!f || !gp || !a3 || !b3) return CaseStatus::inapplicable;
      bool pre = subset_leq(f->dom_set(), *a3) && subset_leq(f->cod_set(), *b3) &&
                 gp->dom == a3->bits && gp->cod == b3->bits && leq(*f, *gp);
      acc.check(pre, pre && leq(extend_cell(*f, *a3, *b3), *gp));
    } else if (law == "absorption") {
      if (!f) return CaseStatus::inapplicable;
      if (a2 && b2) {
        bool pre = subset_leq(*a2, f->dom_set()) && subset_leq(*b2, f->cod_set());
        if (pre) {
          TwoCell gamma(restrict_cell(*f, *a2, *b2), *f);
          TwoCell alpha(identity(*a2), identity(f->dom_set()));
          TwoCell beta(identity(*b2), identity(f->cod_set()));
          acc.check(true, detail::hcompose(gamma, alpha) == gamma &&
                              detail::hcompose(beta, gamma) == gamma);
        }
      }
      if (a3 && b3) {
        bool pre = subset_leq(f->dom_set(), *a3) && subset_leq(f->cod_set(), *b3);
        if (pre) {
          TwoCell gamma(*f, extend_cell(*f, *a3, *b3));
          TwoCell alpha(identity(f->dom_set()), identity(*a3));
          TwoCell beta(identity(f->cod_set()), identity(*b3));
          acc.check(true, detail::hcompose(gamma, alpha) == gamma &&
                              detail::hcompose(beta, gamma) == gamma);
        }
      }
    } else if (law == "distrib") {
      if (!f || !g || f->dom != g->cod) return CaseStatus::inapplicable;
      Cell1 fg = compose(*f, *g);
      if (a2 && c2) {
        bool pre = subset_leq(*a2, g->dom_set()) && subset_leq(*c2, f->cod_set());
        acc.check(pre, pre && compose(restrict_cod(*f, *c2),
                                      restrict_dom(*g, *a2)) ==
                                 restrict_cell(fg, *a2, *c2));
      }
      if (a3 && c3) {
        bool pre = subset_leq(g->dom_set(), *a3) && subset_leq(f->cod_set(), *c3);
        acc.check(pre, pre && compose(extend_cod(*f, *c3), extend_dom(*g, *a3)) ==
                                 extend_cell(fg, *a3, *c3));
      }
    } else if (law == "semidistrib" || law == "theorems") {
      if (f && g && g->dom == f->cod) {
        Cell1 gf = compose(*g, *f);
        if (a2 && b2 && c2) {
          bool pre = subset_leq(*a2, f->dom_set()) &&
                     subset_leq(*b2, f->cod_set()) &&
                     subset_leq(*c2, g->cod_set());
          acc.check(pre, pre && leq(compose(restrict_cell(*g, *b2, *c2),
                                            restrict_cell(*f, *a2, *b2)),
                                    restrict_cell(gf, *a2, *c2)));
        }
        if (a3 && b3 && c3) {
          bool pre = subset_leq(f->dom_set(), *a3) &&
                     subset_leq(f->cod_set(), *b3) &&
                     subset_leq(g->cod_set(), *c3);
          acc.check(pre, pre && leq(extend_cell(gf, *a3, *c3),
                                    compose(extend_cell(*g, *b3, *c3),
                                            extend_cell(*f, *a3, *b3))));
        }
      }
      if (f && g && f->dom == g->dom && f->cod == g->cod && leq(*f, *g)) {
        if (a2 && b2 && !c2) {
          bool pre = subset_leq(*a2, f->dom_set()) && subset_leq(*b2, f->cod_set());
          acc.check(pre, pre && leq(restrict_cell(*f, *a2, *b2),
                                    restrict_cell(*g, *a2, *b2)));
        }
        if (a3 && b3 && !c3) {
          bool pre = subset_leq(f->dom_set(), *a3) && subset_leq(f->cod_set(), *b3);
          acc.check(pre, pre && leq(extend_cell(*f, *a3, *b3),
                                    extend_cell(*g, *a3, *b3)));
        }
      }
      if (const Subset* a = v.subset("A"); a && a2 && !f) {
        bool pre = subset_leq(*a2, *a);
        acc.check(pre, pre && leq(identity(*a2),
                                  restrict_cell(identity(*a), *a2, *a2)) &&
                           leq(extend_cell(identity(*a2), *a, *a), identity(*a)));
      }
    } else if (law == "functoriality") {
      if (f && g && f->dom == g->dom && f->cod == g->cod && leq(*f, *g) && a2 &&
          b2 && a3 && b3) {
        bool pre = subset_leq(*a2, f->dom_set()) &&
                   subset_leq(*b2, f->cod_set()) &&
                   subset_leq(f->dom_set(), *a3) && subset_leq(f->cod_set(), *b3);
        acc.check(pre, pre && leq(restrict_cell(*f, *a2, *b2),
                                  restrict_cell(*g, *a2, *b2)) &&
                           leq(extend_cell(*f, *a3, *b3),
                               extend_cell(*g, *a3, *b3)));
      }
      if (const Subset* a = v.subset("A"); a && a2 && b3) {
        bool pre = subset_leq(*a2, *a) && subset_leq(*a, *b3);
        acc.check(pre, pre && leq(identity(*a2),
                                  restrict_cell(identity(*a), *a2, *a2)) &&
                           leq(extend_cell(identity(*a), *b3, *b3),
                               identity(*b3)));
      }
    } else {
      return CaseStatus::unknown_law;
    }
  } catch (const Error&) {
    return CaseStatus::fail;
  }
  if (!acc.applicable) return CaseStatus::inapplicable;
  return acc.ok ? CaseStatus::pass : CaseStatus::fail;
}

}  // namespace conceptory::laws
