#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <orthoposet/canonical.hpp>
#include <orthoposet/enumerate.hpp>
#include <orthoposet/ortho.hpp>
#include <orthoposet/poset.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace orthoposet;

namespace {

EnumResult run(int max_n, std::vector<EnumFilter> filters = {}, bool naive = false,
               ExtensionOrder order = ExtensionOrder::lex, int jobs = 1) {
  EnumJob job;
  job.max_n = max_n;
  job.filters = std::move(filters);
  job.order = order;
  job.jobs = jobs;
  return naive ? naive_enumerate(job) : enumerate(job);
}

using Counts = std::map<int, long long>;

}  // namespace

TEST_CASE("filter names round-trip") {
  for (EnumFilter f : {EnumFilter::omp, EnumFilter::gom, EnumFilter::boolean_poset,
                       EnumFilter::orthogonal, EnumFilter::non_lattice})
    CHECK(filter_from_name(filter_name(f)) == f);
  CHECK(filter_from_name("non_lattice") == EnumFilter::non_lattice);
  CHECK_THROWS_AS(filter_from_name("everything"), std::invalid_argument);
}

TEST_CASE("counts of bounded involutive posets") {
  const Counts expect = {{2, 1}, {3, 1}, {4, 3}, {5, 4}, {6, 13}, {7, 22}, {8, 80}};
  CHECK(run(8).counts_by_size == expect);
  CHECK(run(8, {}, true).counts_by_size == expect);
}

TEST_CASE("filtered counts match the naive engine") {
  const std::map<EnumFilter, Counts> expect = {
      {EnumFilter::omp, {{2, 1}, {4, 1}, {6, 1}, {8, 2}}},
      {EnumFilter::gom, {{2, 1}, {4, 1}, {6, 1}, {8, 2}}},
      {EnumFilter::boolean_poset, {{2, 1}, {4, 1}, {8, 1}}},
      {EnumFilter::orthogonal,
       {{2, 1}, {3, 1}, {4, 3}, {5, 4}, {6, 12}, {7, 20}, {8, 61}}},
      {EnumFilter::non_lattice, {{6, 1}, {7, 2}, {8, 19}}},
  };
  for (const auto& [f, counts] : expect) {
    CAPTURE(filter_name(f));
    CHECK(run(8, {f}).counts_by_size == counts);
    CHECK(run(8, {f}, true).counts_by_size == counts);
  }

  // Combining filters intersects them.
  CHECK(run(8, {EnumFilter::omp, EnumFilter::non_lattice}).counts_by_size.empty());
}

TEST_CASE("orthomodular structures only occur at even sizes") {
  for (EnumFilter f : {EnumFilter::omp, EnumFilter::gom, EnumFilter::boolean_poset}) {
    EnumResult r = run(8, {f});
    for (const auto& [n, c] : r.counts_by_size) {
      CHECK(n % 2 == 0);
      CHECK(c > 0);
    }
  }
}

TEST_CASE("extension order and thread count do not change the result") {
  EnumResult base = run(8);
  for (ExtensionOrder order : {ExtensionOrder::lex, ExtensionOrder::reverse}) {
    for (int jobs : {1, 2, 4}) {
      EnumResult r = run(8, {}, false, order, jobs);
      CHECK(r.counts_by_size == base.counts_by_size);
      CHECK(r.representatives == base.representatives);
    }
  }
}

TEST_CASE("representatives are distinct canonical encodings of real structures") {
  EnumResult r = run(7, {EnumFilter::orthogonal});
  CHECK(static_cast<long long>(r.representatives.size()) == r.total());
  std::set<std::vector<std::uint8_t>> distinct(r.representatives.begin(),
                                               r.representatives.end());
  CHECK(distinct.size() == r.representatives.size());

  std::vector<OrthoPoset> decoded = decode_representatives(r);
  REQUIRE(decoded.size() == r.representatives.size());
  Counts by_size;
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    const OrthoPoset& op = decoded[i];
    by_size[op.size()] += 1;
    CHECK(is_orthogonal_poset(op).verdict);
    CHECK(canonical_form(op.poset(), op.involution()) == r.representatives[i]);
  }
  CHECK(by_size == r.counts_by_size);
}

TEST_CASE("naive engine is capped") {
  CHECK_THROWS_AS(run(9, {}, true), FeasibilityError);
}

TEST_CASE("exhaustive mode refuses sizes beyond the feasibility limit") {
  EnumJob job;
  job.max_n = default_feasibility_limit() + 2;
  try {
    enumerate(job);
    FAIL("expected FeasibilityError");
  } catch (const FeasibilityError& e) {
    CHECK(std::string(e.what()).find("ORTHOPOSET_FEASIBILITY_LIMIT") !=
          std::string::npos);
  }
  CHECK(default_feasibility_limit() >= 12);
}

TEST_CASE("job validation") {
  EnumJob job;
  job.max_n = 1;
  CHECK_THROWS_AS(enumerate(job), std::invalid_argument);
}

TEST_CASE("checkpoints resume completed runs") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "orthoposet_ck_test.txt";
  std::error_code ec;
  fs::remove(path, ec);

  EnumJob job;
  job.max_n = 7;
  job.filters = {EnumFilter::orthogonal};
  job.checkpoint = path.string();
  EnumResult first = enumerate(job);
  REQUIRE(fs::exists(path));

  EnumResult second = enumerate(job);
  CHECK(second.counts_by_size == first.counts_by_size);
  CHECK(second.representatives == first.representatives);
  bool resumed = false;
  for (const auto& line : second.certificate)
    if (line.find("resumed from checkpoint") != std::string::npos) resumed = true;
  CHECK(resumed);

  SUBCASE("a mismatched checkpoint is ignored and rewritten") {
    std::ofstream(path) << "orthoposet-enum v1\nmax_n 3\norder lex\nfilters none\n";
    EnumResult third = enumerate(job);
    CHECK(third.counts_by_size == first.counts_by_size);
    for (const auto& line : third.certificate)
      CHECK(line.find("resumed") == std::string::npos);
    // The rewrite leaves a loadable file behind.
    EnumResult fourth = enumerate(job);
    CHECK(fourth.counts_by_size == first.counts_by_size);
  }
  fs::remove(path, ec);
}

TEST_CASE("minimality certificate at desk scale") {
  EnumResult r = verify_minimality(10);
  CHECK(r.ok);
  CHECK(r.counts_by_size == Counts{{2, 1}, {4, 1}, {6, 1}, {8, 2}, {10, 2}});
  REQUIRE_FALSE(r.certificate.empty());
  CHECK(r.certificate.back() ==
        "no non-lattice orthomodular poset with at most 10 elements");

  EnumResult rev = verify_minimality(10, 2, ExtensionOrder::reverse);
  CHECK(rev.ok);
  CHECK(rev.counts_by_size == r.counts_by_size);
}

TEST_CASE("proof-guided mode delegates to the 18-element argument") {
  EnumJob job;
  job.mode = EnumMode::proof_guided;
  EnumResult r = enumerate(job);
  CHECK(r.ok);
  CHECK(r.counts_by_size == Counts{{18, 1}});
}
