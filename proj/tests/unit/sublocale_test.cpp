#include <gtest/gtest.h>

#include <set>

#include "../support.hpp"
#include "locale_lab/corpus.hpp"
#include "locale_lab/error.hpp"
#include "locale_lab/sublocale.hpp"

using namespace locale_lab;
using namespace locale_lab::testing;

namespace {

std::vector<std::vector<std::string>> label_sets(const Frame& L, const std::vector<Sublocale>& subs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : subs) out.push_back(sorted(L.labels_of(s.members)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Sublocale, EnumerationMatchesOracle) {
  for (const char* name : {"one", "two", "C3", "C4", "B4", "B8"}) {
    SCOPED_TRACE(name);
    Frame L = data_frame(name);
    const auto& o = oracle()["fixtures"][name];
    auto subs = enumerate_sublocales(L);
    EXPECT_EQ(subs.size(), o["sublocale_count"].get<std::size_t>());
    EXPECT_EQ(label_sets(L, subs), o["sublocales"].get<std::vector<std::vector<std::string>>>());
  }
}

TEST(Sublocale, OptimizedAgreesWithRawScan) {
  for (const auto& e : build_corpus(5, 10)) {
    auto fast = enumerate_sublocales(e.frame, 10);
    auto raw = enumerate_sublocales_raw(e.frame);
    std::set<Bitset> a, b;
    for (auto& s : fast) a.insert(s.members);
    for (auto& s : raw) b.insert(s.members);
    EXPECT_EQ(a, b) << e.id;
    EXPECT_EQ(fast.size(), a.size()) << e.id << " has duplicates";
  }
}

TEST(Sublocale, EnumerationBound) {
  Frame L = downset_frame(antichain_poset(4));  // 16 elements
  EXPECT_THROW(enumerate_sublocales(L, 12), LocaleError);
}

TEST(Sublocale, OneATopInB4IsASublocale) {
  Frame B4 = data_frame("B4");
  Bitset s = members_of(B4, {"1", "a"});
  EXPECT_EQ(is_sublocale(B4, s), oracle()["extra"]["B4_is_sublocale_1a"].get<bool>());
  auto fit = fitting(make_sublocale(B4, s));
  EXPECT_EQ(sorted(B4.labels_of(fit.members)), oracle()["extra"]["B4_fitting_b_a"].get<std::vector<std::string>>());
}

TEST(Sublocale, FittingOfOnePointInC3) {
  Frame C3 = data_frame("C3");
  auto b = one_point(C3, C3.at("m"));
  EXPECT_EQ(sorted(C3.labels_of(fitting(b).members)), oracle()["extra"]["C3_fitting_m1"].get<std::vector<std::string>>());
  EXPECT_FALSE(is_fitted(b));
  EXPECT_TRUE(is_closed(b));  // b(m) = up(m)
}

TEST(Sublocale, RejectsNonSublocaleWithReason) {
  Frame C4 = data_frame("C4");
  Bitset s(C4.size());
  s.set(C4.bottom());  // missing top
  EXPECT_FALSE(is_sublocale(C4, s));
  auto f = sublocale_failure(C4, s);
  ASSERT_TRUE(f.has_value());
  EXPECT_FALSE(f->reason.empty());
  EXPECT_THROW(make_sublocale(C4, s), LocaleError);
}

TEST(Sublocale, OpenAndClosedAreComplements) {
  for (const auto& e : build_corpus(4)) {
    const Frame& L = e.frame;
    for (Elem a = 0; a < L.size(); ++a) {
      auto o = open_sublocale(L, a), c = closed_sublocale(L, a);
      std::vector<Sublocale> pair{o, c};
      EXPECT_EQ(sublocale_meet(L, pair), least_sublocale(L)) << e.id;
      EXPECT_EQ(sublocale_join(L, pair), whole_sublocale(L)) << e.id;
      EXPECT_TRUE(is_closed(c));
      EXPECT_TRUE(is_fitted(o));
      EXPECT_EQ(closure(c), c);
      EXPECT_EQ(fitting(o), o);
    }
  }
}

TEST(Sublocale, ClosureAndFittingAreClosureOperators) {
  for (const auto& e : build_corpus(4, 8)) {
    const Frame& L = e.frame;
    for (const auto& S : enumerate_sublocales(L)) {
      auto c = closure(S), f = fitting(S);
      EXPECT_TRUE(S.members.is_subset_of(c.members));
      EXPECT_TRUE(S.members.is_subset_of(f.members));
      EXPECT_EQ(closure(c), c);
      EXPECT_EQ(fitting(f), f);
    }
  }
}

TEST(Sublocale, NucleusImageAndInducedFrame) {
  for (const auto& e : build_corpus(4, 8)) {
    const Frame& L = e.frame;
    for (const auto& S : enumerate_sublocales(L)) {
      for (Elem a = 0; a < L.size(); ++a) {
        Elem v = nucleus_image(S, a);
        EXPECT_TRUE(S.contains(v));
        EXPECT_TRUE(L.leq(a, v));
        EXPECT_EQ(nucleus_image(S, v), v);
      }
      Frame M = induced_frame(S);
      EXPECT_EQ(M.size(), S.size());
    }
  }
}

TEST(Sublocale, OnePointIsTopAndPrime) {
  Frame B8 = data_frame("B8");
  for (Elem p : primes(B8)) {
    auto b = one_point(B8, p);
    EXPECT_EQ(b.size(), 2u);
    EXPECT_TRUE(b.contains(B8.top()));
    EXPECT_TRUE(is_closed(b));
  }
}

// Join in S(L) against its definition: all meets of subsets of the union.
TEST(Sublocale, JoinIsMeetsOfSubsetsOfUnion) {
  for (const auto& e : build_corpus(4, 8)) {
    const Frame& L = e.frame;
    auto subs = enumerate_sublocales(L);
    for (const auto& S : subs)
      for (const auto& T : subs) {
        Bitset u = S.members;
        u |= T.members;
        auto elems = u.indices();
        Bitset want(L.size());
        for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
          Elem m = L.top();
          for (std::size_t i = 0; i < elems.size(); ++i)
            if (mask >> i & 1U) m = L.meet(m, static_cast<Elem>(elems[i]));
          want.set(m);
        }
        std::vector<Sublocale> pair{S, T};
        ASSERT_EQ(sublocale_join(L, pair).members, want) << e.id;
      }
  }
}
