#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "copnum/canonical.hpp"
#include "copnum/enumerate.hpp"
#include "copnum/graph6.hpp"
#include "oracles.hpp"

using namespace copnum;

namespace {

std::set<std::string> forms(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const Graph& g : gs) out.insert(canonical_form(g).bytes);
  return out;
}

std::vector<Graph> read_fixture(const std::string& name) {
  std::ifstream in(std::string(COPNUM_TEST_DATA_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return read_graph6_stream(in);
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  const std::vector<std::size_t> want{1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(generate(GenSpec{n}).size(), want[n - 1]) << n;
  EXPECT_EQ(to_graph6(generate(GenSpec{1}).front()), "@");
  const auto three = forms(generate(GenSpec{3}));
  EXPECT_EQ(three, (std::set<std::string>{canonical_form(path_graph(3)).bytes,
                                           canonical_form(complete_graph(3)).bytes}));
}

TEST(Enumerate, MatchesBruteForceUpTo6) {
  for (int n = 1; n <= 6; ++n) {
    const auto gen = generate(GenSpec{n});
    const auto brute = brute_force_enumerate(n);
    EXPECT_EQ(forms(gen), forms(brute)) << n;
    EXPECT_EQ(forms(gen).size(), gen.size()) << "duplicates at n=" << n;
  }
  EXPECT_EQ(brute_force_enumerate(4).size(), 6U);
  EXPECT_THROW(brute_force_enumerate(8), Error);
}

TEST(Enumerate, DegreeBoundsMatchFilteredBruteForce) {
  for (int n = 2; n <= 6; ++n) {
    const auto brute = brute_force_enumerate(n);
    for (int lo = 0; lo < n; ++lo) {
      for (int hi = lo; hi < n; ++hi) {
        std::vector<Graph> filtered;
        for (const Graph& g : brute) {
          if (g.min_degree() >= lo && g.max_degree() <= hi) filtered.push_back(g);
        }
        const auto gen = generate(GenSpec{n, lo, hi});
        EXPECT_EQ(forms(gen), forms(filtered)) << "n=" << n << " d=" << lo << " D=" << hi;
        EXPECT_EQ(gen.size(), filtered.size());
      }
    }
  }
}

TEST(Enumerate, OutputIsCanonicalAndDistinct) {
  const auto gen = generate(GenSpec{8});
  std::set<std::string> seen;
  for (const Graph& g : gen) {
    EXPECT_EQ(canonical_graph(g), g);
    EXPECT_TRUE(oracle::connected(g));
    EXPECT_TRUE(seen.insert(to_graph6(g)).second);
  }
}

TEST(Enumerate, AgreesWithExternalGenerator) {
  const auto ext8 = read_fixture("geng_connected_8.g6");
  EXPECT_EQ(ext8.size(), 11117U);
  EXPECT_EQ(forms(ext8), forms(generate(GenSpec{8})));
  const auto cubic = read_fixture("geng_cubic_10.g6");
  EXPECT_EQ(cubic.size(), 19U);
  EXPECT_EQ(forms(cubic), forms(generate(GenSpec{10, 3, 3})));
}

TEST(Enumerate, DeterministicOrder) {
  const auto a = generate(GenSpec{7});
  const auto b = generate(GenSpec{7});
  EXPECT_EQ(a, b);
}

TEST(Enumerate, BatchesAndResume) {
  const Generator gen(GenSpec{7});
  std::vector<Graph> all;
  for (std::size_t b = 0; b < gen.batch_count(); ++b) {
    const auto part = gen.expand(b);
    all.insert(all.end(), part.begin(), part.end());
  }
  EXPECT_EQ(all, generate(GenSpec{7}));

  const std::string token = gen.checkpoint_token(5);
  EXPECT_EQ(gen.resume_batch(token), 5U);
  std::vector<Graph> tail;
  gen.run([&](const Graph& g) { tail.push_back(g); }, gen.resume_batch(token));
  std::size_t head = 0;
  for (std::size_t b = 0; b < 5; ++b) head += gen.expand(b).size();
  EXPECT_EQ(tail, std::vector<Graph>(all.begin() + static_cast<std::ptrdiff_t>(head), all.end()));

  EXPECT_THROW(gen.resume_batch("garbage"), Error);
  EXPECT_THROW(Generator(GenSpec{8}).resume_batch(token), Error);
  EXPECT_THROW(gen.resume_batch(gen.checkpoint_token(gen.batch_count() + 1)), Error);
  EXPECT_THROW(gen.expand(gen.batch_count()), Error);
}

TEST(Enumerate, InvalidSpecs) {
  EXPECT_THROW(Generator(GenSpec{0}), Error);
  EXPECT_THROW(Generator(GenSpec{17}), Error);
  EXPECT_THROW(Generator(GenSpec{5, 3, 2}), Error);
  EXPECT_THROW(Generator(GenSpec{5, 0, 5}), Error);
  EXPECT_TRUE(generate(GenSpec{5, 4, 4}).size() == 1U);
}

TEST(Graph6Reader, Streams) {
  std::istringstream two("@\nA_\n");
  const auto gs = read_graph6_stream(two);
  ASSERT_EQ(gs.size(), 2U);
  EXPECT_EQ(gs[0], Graph(1));
  EXPECT_EQ(gs[1], path_graph(2));

  std::istringstream empty("");
  EXPECT_TRUE(read_graph6_stream(empty).empty());

  std::istringstream bad("A\x01\n");
  try {
    read_graph6_stream(bad);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }

  std::istringstream mixed("@\n\nzz\nA_\r\n");
  Graph6Reader reader(mixed, Graph6Reader::OnError::Skip);
  int count = 0;
  while (reader.next()) ++count;
  EXPECT_EQ(count, 2);
  EXPECT_EQ(reader.skipped(), 1U);
  ASSERT_EQ(reader.skip_messages().size(), 1U);
  EXPECT_NE(reader.skip_messages()[0].find("line 3"), std::string::npos);
}
