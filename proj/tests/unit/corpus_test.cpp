#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "../support.hpp"
#include "locale_lab/canonical.hpp"
#include "locale_lab/corpus.hpp"
#include "locale_lab/error.hpp"
#include "locale_lab/parallel.hpp"

using namespace locale_lab;
using namespace locale_lab::testing;

TEST(Corpus, PosetCountsMatchOracle) {
  for (auto& [k, count] : oracle()["poset_counts_natural"].items())
    EXPECT_EQ(enumerate_posets(std::stoul(k)).size(), count.get<std::size_t>()) << k;
  for (auto& [k, count] : oracle()["poset_counts_raw"].items())
    EXPECT_EQ(enumerate_posets_raw(std::stoul(k)).size(), count.get<std::size_t>()) << k;
}

TEST(Corpus, PosetEnumerationAgreesWithRawScan) {
  for (std::size_t k = 1; k <= kRawPosetScanLimit; ++k) {
    std::set<std::string> fast, raw;
    for (const auto& P : enumerate_posets(k)) fast.insert(poset_canonical_form(P));
    for (const auto& P : enumerate_posets_raw(k)) raw.insert(poset_canonical_form(P));
    EXPECT_EQ(fast, raw) << k;
  }
  EXPECT_THROW(enumerate_posets_raw(kRawPosetScanLimit + 1), LocaleError);
  EXPECT_THROW(enumerate_posets(kDefaultMaxPoset + 1), LocaleError);
}

TEST(Corpus, DownsetFramesOfSmallPosets) {
  EXPECT_EQ(downset_frame(chain_poset(3)).size(), 4u);
  EXPECT_EQ(downset_frame(antichain_poset(3)).size(), 8u);
  EXPECT_EQ(alexandrov_frame(sierpinski_space()).size(), 3u);
  EXPECT_EQ(canonical_form(downset_frame(antichain_poset(2))), canonical_form(fixture("B4")));
}

TEST(Corpus, DefaultCorpusShape) {
  auto corpus = build_corpus();
  EXPECT_EQ(corpus.size(), 88u);
  std::map<std::size_t, std::size_t> hist;
  for (const auto& e : corpus) ++hist[e.frame.size()];
  std::map<std::size_t, std::size_t> want{{1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 3},  {6, 5},  {7, 7},
                                          {8, 9},  {9, 9},  {10, 11}, {11, 8}, {12, 8}, {13, 4}, {14, 5},
                                          {15, 2}, {16, 3}, {17, 2}, {18, 3}, {20, 2}, {24, 1}, {32, 1}};
  EXPECT_EQ(hist, want);
  std::set<std::string> ids;
  for (const auto& e : corpus) ids.insert(e.id);
  EXPECT_EQ(ids.size(), corpus.size());
  for (const char* name : {"one", "two", "C3", "C4", "B4", "B8", "sierpinski2"}) EXPECT_TRUE(ids.count(name)) << name;
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    const auto& a = corpus[i - 1];
    const auto& b = corpus[i];
    EXPECT_TRUE(std::pair(a.frame.size(), a.canonical) < std::pair(b.frame.size(), b.canonical));
  }
}

TEST(Corpus, JsonlRoundTrip) {
  auto corpus = build_corpus(4);
  std::stringstream ss;
  write_corpus_jsonl(ss, corpus);
  std::string first = ss.str();
  auto back = read_corpus_jsonl(ss);
  ASSERT_EQ(back.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(back[i].id, corpus[i].id);
    EXPECT_EQ(back[i].hash, corpus[i].hash);
    EXPECT_EQ(back[i].canonical, corpus[i].canonical);
  }
  std::stringstream again;
  write_corpus_jsonl(again, back);
  EXPECT_EQ(again.str(), first);
}

TEST(Corpus, JsonlHashMismatchDetected) {
  auto corpus = build_corpus(3);
  std::stringstream ss;
  write_corpus_jsonl(ss, corpus);
  std::string text = ss.str();
  auto pos = text.find(corpus.back().hash);
  ASSERT_NE(pos, std::string::npos);
  text[pos] = text[pos] == '0' ? '1' : '0';
  std::stringstream bad(text);
  try {
    read_corpus_jsonl(bad);
    FAIL();
  } catch (const LocaleError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InternalInconsistency);
  }
}

TEST(Corpus, IndependentOfThreadCount) {
  auto run = [](const char* threads) {
    setenv("LOCALE_LAB_THREADS", threads, 1);
    std::stringstream ss;
    write_corpus_jsonl(ss, build_corpus());
    return ss.str();
  };
  std::string one = run("1"), many = run("4");
  unsetenv("LOCALE_LAB_THREADS");
  EXPECT_EQ(one, many);
}

TEST(Parallel, LowestIndexExceptionWins) {
  setenv("LOCALE_LAB_THREADS", "4", 1);
  try {
    parallel_for(100, [](std::size_t i) {
      if (i % 10 == 7) throw LocaleError(ErrorKind::InvalidInput, std::to_string(i));
    });
    FAIL();
  } catch (const LocaleError& e) {
    EXPECT_STREQ(e.what(), "InvalidInput: 7");
  }
  unsetenv("LOCALE_LAB_THREADS");
}
