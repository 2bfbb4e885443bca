#include "terminfer/error.hpp"
#include "terminfer/polyhedron.hpp"

#include "properties.hpp"

#include <gtest/gtest.h>

using namespace terminfer;

namespace {

LinExpr v(const std::string &name, long c = 1) { return LinExpr::variable(name, c); }

Polyhedron poly(std::vector<std::string> dims, std::vector<LinConstraint> cs) {
    return Polyhedron::from_constraints(std::move(dims), cs);
}

} // namespace

TEST(Polyhedron, MeetDetectsInfeasibility) {
    auto a = poly({"x"}, {LinConstraint::eq(v("x"), 0)});
    auto b = poly({"x"}, {LinConstraint::ge(v("x"), 1)});
    EXPECT_TRUE(a.meet(b).is_empty());
}

TEST(Polyhedron, MeetSubstitutesEqualities) {
    auto a = poly({"x", "y", "z"}, {LinConstraint::eq(v("x") + v("y"), v("z"))});
    auto b = poly({"x", "y", "z"}, {LinConstraint::eq(v("y"), 0)});
    auto expected = poly({"x", "y", "z"}, {LinConstraint::eq(v("x"), v("z")), LinConstraint::eq(v("y"), 0)});
    EXPECT_EQ(a.meet(b), expected);
}

TEST(Polyhedron, MeetWithUniverseIsIdentity) {
    auto p = poly({"x", "y"}, {LinConstraint::le(v("x"), v("y") + 3)});
    EXPECT_EQ(Polyhedron::universe({"x", "y"}).meet(p), p);
}

TEST(Polyhedron, MeetRejectsDimensionMismatch) {
    EXPECT_THROW(Polyhedron::universe({"x"}).meet(Polyhedron::universe({"y"})), DimensionMismatch);
}

TEST(Polyhedron, CanonicalFormIsRepresentationIndependent) {
    // Same set written three ways.
    auto a = poly({"x", "y"}, {LinConstraint::ge(v("x"), v("y")), LinConstraint::le(v("x"), v("y"))});
    auto b = poly({"x", "y"}, {LinConstraint::eq(v("x", 2), v("y", 2))});
    auto c = poly({"x", "y"}, {LinConstraint::eq(v("x"), v("y")), LinConstraint::ge(v("x") + v("y"), 0),
                               LinConstraint::le(v("x"), v("y") + 5)});
    EXPECT_EQ(a, b);
    EXPECT_EQ(b, c);
}

TEST(Polyhedron, ImplicitEqualityFromNonNegativity) {
    auto p = poly({"x", "y"}, {LinConstraint::le(v("x") + v("y"), 0)});
    EXPECT_EQ(p, poly({"x", "y"}, {LinConstraint::eq(v("x"), 0), LinConstraint::eq(v("y"), 0)}));
    EXPECT_EQ(p.affine_dimension(), 0);
}

TEST(Polyhedron, ProjectRecursiveAppendClause) {
    std::vector<std::string> dims{"x", "y", "z", "e", "xp", "zp"};
    auto p = poly(dims, {LinConstraint::eq(v("x"), v("e") + v("xp") + 1),
                         LinConstraint::eq(v("z"), v("e") + v("zp") + 1),
                         LinConstraint::eq(v("xp") + v("y"), v("zp"))});
    auto shadow = p.project({"x", "y", "z"});

    // Oracle: naive Fourier-Motzkin on the same system.
    auto fm = terminfer::testing::fm_eliminate(p.constraints(), {"e", "xp", "zp"});
    auto oracle = Polyhedron::from_constraints({"x", "y", "z"}, fm);
    EXPECT_TRUE(shadow.equivalent(oracle));
    auto expected = poly({"x", "y", "z"}, {LinConstraint::eq(v("x") + v("y"), v("z")), LinConstraint::ge(v("x"), 1),
                                           LinConstraint::ge(v("z"), 1)});
    EXPECT_EQ(shadow, expected);
}

TEST(Polyhedron, ProjectUniverseAndEquality) {
    EXPECT_TRUE(Polyhedron::universe({"a", "b"}).project({"a"}).is_universe());
    auto p = poly({"x", "y"}, {LinConstraint::eq(v("x"), v("y"))});
    EXPECT_TRUE(p.project({"x"}).is_universe());
}

TEST(PolyhedronLaws, ProjectionMatchesIntervalOracle) {
    auto failures = terminfer::testing::projection_oracle_failures(7, 150);
    EXPECT_TRUE(failures.empty()) << failures.front();
}

TEST(Polyhedron, HullOfTwoPoints) {
    auto a = poly({"x"}, {LinConstraint::eq(v("x"), 0)});
    auto b = poly({"x"}, {LinConstraint::eq(v("x"), 2)});
    EXPECT_EQ(a.hull(b), poly({"x"}, {LinConstraint::le(v("x"), 2)}));
}

TEST(Polyhedron, HullWithEmptyIsIdentity) {
    auto p = poly({"x", "y"}, {LinConstraint::ge(v("x"), v("y") + 1)});
    EXPECT_EQ(Polyhedron::empty({"x", "y"}).hull(p), p);
    EXPECT_EQ(p.hull(Polyhedron::empty({"x", "y"})), p);
}

TEST(Polyhedron, HullOfDiagonalPointsMatchesVertexOracle) {
    auto a = poly({"x", "y"}, {LinConstraint::eq(v("x"), 0), LinConstraint::eq(v("y"), 0)});
    auto b = poly({"x", "y"}, {LinConstraint::eq(v("x"), 1), LinConstraint::eq(v("y"), 1)});
    auto h = a.hull(b);
    // Vertices (0,0),(1,1): the segment is x = y, 0 <= x <= 1.
    EXPECT_EQ(h, poly({"x", "y"}, {LinConstraint::eq(v("x"), v("y")), LinConstraint::le(v("x"), 1)}));
    for (int k = 0; k <= 4; ++k) {
        Rational t(k, 4);
        EXPECT_TRUE(h.contains({{"x", t}, {"y", t}}));
    }
    EXPECT_FALSE(h.contains({{"x", Rational(1)}, {"y", Rational(0)}}));
}

TEST(Polyhedron, HullAppendIterate) {
    auto base = poly({"x", "y", "z"}, {LinConstraint::eq(v("x"), 0), LinConstraint::eq(v("y"), v("z"))});
    auto step = poly({"x", "y", "z"}, {LinConstraint::eq(v("x") + v("y"), v("z")), LinConstraint::ge(v("x"), 1)});
    EXPECT_EQ(base.hull(step), poly({"x", "y", "z"}, {LinConstraint::eq(v("x") + v("y"), v("z"))}));
}

TEST(Polyhedron, WidenDropsUnstableBounds) {
    auto prev = poly({"x"}, {LinConstraint::eq(v("x"), 0)});
    auto next = poly({"x"}, {LinConstraint::le(v("x"), 1)});
    EXPECT_TRUE(prev.widen(next).is_universe());
}

TEST(Polyhedron, WidenIsStableOnFixpoint) {
    auto p = poly({"x", "y"}, {LinConstraint::ge(v("x"), v("y") + 1), LinConstraint::le(v("y"), 4)});
    EXPECT_EQ(p.widen(p), p);
}

TEST(Polyhedron, WidenKeepsRelationalInvariant) {
    std::vector<std::string> d{"x", "y", "z"};
    auto prev = poly(d, {LinConstraint::eq(v("x") + v("y"), v("z")), LinConstraint::le(v("x"), 1)});
    auto next = prev.hull(poly(d, {LinConstraint::eq(v("x") + v("y"), v("z")), LinConstraint::le(v("x"), 2)}));
    EXPECT_EQ(prev.widen(next), poly(d, {LinConstraint::eq(v("x") + v("y"), v("z"))}));
}

TEST(Polyhedron, WidenRecoversEqualityWrittenDifferently) {
    // {x=0, y=z} widened by {x+y=z}: the equality x+y=z replaces y=z.
    std::vector<std::string> d{"x", "y", "z"};
    auto prev = poly(d, {LinConstraint::eq(v("x"), 0), LinConstraint::eq(v("y"), v("z"))});
    auto next = poly(d, {LinConstraint::eq(v("x") + v("y"), v("z"))});
    EXPECT_EQ(prev.widen(next), next);
}

TEST(Polyhedron, Entailment) {
    std::vector<std::string> d{"x", "y", "z"};
    auto app = poly(d, {LinConstraint::eq(v("x") + v("y"), v("z"))});
    EXPECT_TRUE(app.entails(LinConstraint::ge(v("z"), v("x"))));
    EXPECT_FALSE(poly({"x"}, {}).entails(LinConstraint::ge(v("x"), 1)));

    std::vector<std::string> big{"x", "y", "z", "e", "xp", "zp"};
    auto clause = poly(big, {LinConstraint::eq(v("x"), v("e") + v("xp") + 1),
                             LinConstraint::eq(v("xp") + v("y"), v("zp")),
                             LinConstraint::eq(v("z"), v("e") + v("zp") + 1)});
    EXPECT_TRUE(clause.entails(LinConstraint::eq(v("x") + v("y"), v("z"))));
}

TEST(Polyhedron, ZeroDimensional) {
    Polyhedron top;
    EXPECT_TRUE(top.is_universe());
    EXPECT_TRUE(Polyhedron::empty({}).is_empty());
    EXPECT_TRUE(top.hull(Polyhedron::empty({})).is_universe());
    EXPECT_TRUE(top.add_constraint({LinExpr(-1), Relation::Ge}).is_empty());
}

TEST(PolyhedronLaws, LatticeOrderOnRandomTriples) {
    auto failures = terminfer::testing::lattice_law_failures(11, 200);
    EXPECT_TRUE(failures.empty()) << failures.front();
}

// Each change raises the dimension or drops one of at most a handful of
// constraints, so 12 steps over 3 dimensions allow at most 11 changes.
TEST(PolyhedronLaws, WideningStabilizesOnAscendingChains) {
    auto failures = terminfer::testing::widening_chain_failures(23, 1000, 12, 11);
    EXPECT_TRUE(failures.empty()) << failures.front();
}

TEST(Polyhedron, RenameAndExtend) {
    auto p = poly({"x", "y"}, {LinConstraint::ge(v("x"), v("y"))});
    auto r = p.rename({{"x", "u"}});
    EXPECT_EQ(r.dims(), (std::vector<std::string>{"u", "y"}));
    EXPECT_TRUE(r.entails(LinConstraint::ge(v("u"), v("y"))));
    auto e = p.extend({"w"});
    EXPECT_EQ(e.dims().size(), 3u);
    EXPECT_FALSE(e.entails(LinConstraint::le(v("w"), 10)));
}

TEST(Polyhedron, ToString) {
    auto p = poly({"x", "y", "z"}, {LinConstraint::eq(v("x") + v("y"), v("z"))});
    EXPECT_EQ(p.to_string(), "{x + y = z}");
    EXPECT_EQ(Polyhedron::empty({"x"}).to_string(), "false");
    EXPECT_EQ(Polyhedron::universe({"x"}).to_string(), "true");
}
