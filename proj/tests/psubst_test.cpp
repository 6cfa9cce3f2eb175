#include "bproof/psubst.hpp"

#include <doctest.h>

#include "bproof/binder.hpp"

using namespace bproof;

namespace {

Expr mv(std::uint32_t i) { return Expr::var(mvar(i)); }
Expr uv(std::uint32_t i) { return Expr::var(uvar(i)); }

}  // namespace

TEST_CASE("identity maps every term to itself") {
  const ParallelSubst id = ParallelSubst::identity();
  const Pred t = Pred::all(Pred::eq(Expr::pair(uv(0), mv(1)), mv(0)));
  CHECK(term_eq(papply(id, t), t));
  CHECK(term_eq(id.image(uvar(7)), uv(7)));
  CHECK(term_eq(id.image(mvar(3)), mv(3)));
}

TEST_CASE("shift agrees with lift") {
  const Namespace m = Namespace::machinery();
  const Namespace ns("ns");
  const Pred t = Pred::all(Pred::conj(Pred::eq(mv(0), mv(1)),
                                      Pred::in(Expr::var(ns.tag(), 0), uv(2))));
  CHECK(term_eq(papply(ParallelSubst::shift(m, 0), t), lift(m, 0, t)));
  CHECK(term_eq(papply(ParallelSubst::shift(m, 1), t), lift(m, 1, t)));
  CHECK(term_eq(papply(ParallelSubst::shift(ns, 0), t), lift(ns, 0, t)));
  CHECK(term_eq(ParallelSubst::shift(m, 2).image(mvar(2)), mv(3)));
  CHECK(term_eq(ParallelSubst::shift(m, 2).image(mvar(1)), mv(1)));
}

TEST_CASE("single agrees with subst") {
  const Expr e = Expr::pair(mv(0), uv(1));
  const Pred t = Pred::all(Pred::eq(uv(0), mv(0)));
  CHECK(term_eq(papply(ParallelSubst::single(uvar(0), e), t),
                subst(uvar(0), e, 0, t)));
  // In particular the image is lifted at the binder, so the dangling 0 of e
  // is not captured.
  CHECK(term_eq(papply(ParallelSubst::single(uvar(0), mv(0)), t),
                Pred::all(Pred::eq(mv(1), mv(0)))));
  CHECK(term_eq(ParallelSubst::single(uvar(0), e).image(uvar(0)), e));
  CHECK(term_eq(ParallelSubst::single(uvar(0), e).image(uvar(1)), uv(1)));
}

TEST_CASE("table entries apply simultaneously, later entries win") {
  // A swap is the canonical simultaneous case: sequential substitution would
  // collapse both variables onto one.
  const ParallelSubst swap = ParallelSubst::table({{uvar(0), uv(1)}, {uvar(1), uv(0)}});
  const Pred t = Pred::eq(uv(0), uv(1));
  CHECK(term_eq(papply(swap, t), Pred::eq(uv(1), uv(0))));

  const ParallelSubst over = ParallelSubst::table({{uvar(0), uv(5)}, {uvar(0), uv(6)}});
  CHECK(term_eq(over.image(uvar(0)), uv(6)));
  CHECK(term_eq(over.image(uvar(2)), uv(2)));
}

TEST_CASE("compose behaves as applying the inner map first") {
  const ParallelSubst inner = ParallelSubst::single(uvar(0), Expr::pair(uv(1), mv(0)));
  const ParallelSubst outer = ParallelSubst::table({{uvar(1), Expr::big()}});
  const ParallelSubst both = ParallelSubst::compose(outer, inner);
  const Pred t = Pred::all(Pred::conj(Pred::eq(uv(0), uv(1)), Pred::in(mv(0), uv(0))));
  CHECK(term_eq(papply(both, t), papply(outer, papply(inner, t))));
  CHECK(term_eq(both.image(uvar(0)), Expr::pair(Expr::big(), mv(0))));
}

TEST_CASE("bound indexes are never disturbed") {
  // A shift of "^" at 0 moves dangling leaves but not bound ones.
  const Pred t = Pred::all(Pred::eq(mv(0), mv(1)));
  CHECK(term_eq(papply(ParallelSubst::shift(Namespace::machinery(), 0), t),
                Pred::all(Pred::eq(mv(0), mv(2)))));
  // Mapping the dangling (^,0) hits the leaf spelled 1 under the binder.
  const ParallelSubst hit = ParallelSubst::single(mvar(0), Expr::big());
  CHECK(term_eq(papply(hit, t), Pred::all(Pred::eq(mv(0), Expr::big()))));
}

TEST_CASE("support is advisory metadata") {
  const ParallelSubst s = ParallelSubst::single(uvar(0), Expr::big());
  CHECK_FALSE(s.support().has_value());
  const ParallelSubst tagged = s.with_support({uvar(0)});
  REQUIRE(tagged.support().has_value());
  CHECK(tagged.support()->size() == 1);
  CHECK((*tagged.support())[0] == uvar(0));
  // Application ignores it entirely.
  const Pred t = Pred::eq(uv(0), uv(1));
  CHECK(term_eq(papply(tagged, t), papply(s, t)));
}
