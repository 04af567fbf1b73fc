#include "chromo/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace chromo {

namespace {

constexpr std::uint64_t kChunkSize = 4096;

struct ChunkResult {
  std::uint64_t triangles = 0;
  std::uint64_t collinear = 0;
  std::uint64_t euler_degenerate = 0;
  std::uint64_t omega_degenerate = 0;
  std::uint64_t errors = 0;
  std::vector<CheckCounts> counts;
  std::vector<Counterexample> counterexamples;
};

using Coords = std::array<std::uint64_t, 6>;

Coords decode(std::uint64_t index, std::uint64_t p) {
  Coords c{};
  for (int i = 5; i >= 0; --i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

class Worker {
 public:
  Worker(const SweepOptions& options, const FieldSpec& field)
      : options_(options), field_(field), outcomes_(check_catalog().size()) {
    const auto& catalog = check_catalog();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      if (std::find(options.groups.begin(), options.groups.end(), catalog[i].group) != options.groups.end()) {
        selected_.push_back(i);
      }
      if (catalog[i].name.starts_with("triple_quad.")) triple_quad_.push_back(i);
    }
  }

  const std::vector<std::size_t>& selected() const { return selected_; }

  ChunkResult run_chunk(std::uint64_t chunk, std::uint64_t total) {
    ChunkResult r;
    r.counts.resize(check_catalog().size());
    const std::uint64_t begin = chunk * kChunkSize;
    const std::uint64_t end = std::min(total, begin + kChunkSize);
    const std::uint64_t p = options_.prime;

    std::mt19937_64 rng;
    if (!options_.exhaustive) {
      std::seed_seq seq{options_.seed, chunk};
      rng.seed(seq);
    }
    std::uniform_int_distribution<std::uint64_t> coordinate(0, p - 1);

    for (std::uint64_t index = begin; index < end; ++index) {
      Coords c;
      if (options_.exhaustive) {
        c = decode(index, p);
      } else {
        for (auto& v : c) v = coordinate(rng);
      }
      visit(index, c, r);
    }
    return r;
  }

 private:
  void record_failure(std::uint64_t index, const Coords& c, std::string check, ChunkResult& r) {
    if (r.counterexamples.size() < options_.max_counterexamples) {
      r.counterexamples.push_back({index, {{{c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}}}, std::move(check)});
    }
  }

  void tally(const std::vector<std::size_t>& which, std::uint64_t index, const Coords& c, ChunkResult& r) {
    const auto& catalog = check_catalog();
    for (std::size_t i : which) {
      switch (outcomes_[i]) {
        case Outcome::pass:
          ++r.counts[i].passed;
          break;
        case Outcome::fail:
          ++r.counts[i].failed;
          record_failure(index, c, catalog[i].name, r);
          break;
        case Outcome::skipped_null:
          ++r.counts[i].skipped;
          break;
      }
    }
  }

  void visit(std::uint64_t index, const Coords& c, ChunkResult& r) {
    Point a1(field_, static_cast<long long>(c[0]), static_cast<long long>(c[1]));
    Point a2(field_, static_cast<long long>(c[2]), static_cast<long long>(c[3]));
    Point a3(field_, static_cast<long long>(c[4]), static_cast<long long>(c[5]));
    if (collinear(a1, a2, a3)) {
      ++r.collinear;
      if (std::find(options_.groups.begin(), options_.groups.end(), CheckGroup::laws) != options_.groups.end()) {
        run_collinear_checks(a1, a2, a3, options_.groups, outcomes_);
        tally(triple_quad_, index, c, r);
      }
      return;
    }
    ++r.triangles;
    try {
      SpecialCases special = run_checks(Triangle(a1, a2, a3), options_.groups, outcomes_);
      r.euler_degenerate += special.euler_degenerate;
      r.omega_degenerate += special.omega_degenerate ? 1 : 0;
      tally(selected_, index, c, r);
    } catch (const std::exception& e) {
      // Any exception on a valid triangle is itself a counterexample.
      ++r.errors;
      record_failure(index, c, std::string("exception: ") + e.what(), r);
    }
  }

  const SweepOptions& options_;
  FieldSpec field_;
  std::vector<Outcome> outcomes_;
  std::vector<std::size_t> selected_;
  std::vector<std::size_t> triple_quad_;
};

}  // namespace

std::uint64_t SweepSummary::total_failures() const {
  std::uint64_t n = unexpected_errors;
  for (const auto& c : counts) n += c.failed;
  return n;
}

SweepSummary run_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const FieldSpec field = FieldSpec::prime(options.prime);
  const std::uint64_t p = options.prime;

  SweepSummary s;
  s.modulus = p;
  if (options.exhaustive) {
    s.total = p * p * p * p * p * p;
    s.mode = "exhaustive";
    s.enumeration = "all " + std::to_string(p) + "^6 ordered coordinate triples in lexicographic order";
  } else {
    s.total = options.samples;
    s.mode = "random:" + std::to_string(options.samples);
    s.enumeration = std::to_string(options.samples) + " uniformly random ordered coordinate triples, seed " +
                    std::to_string(options.seed) + ", " + std::to_string(kChunkSize) + " per chunk";
  }

  const std::uint64_t chunks = (s.total + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    Worker worker(options, field);
    for (std::uint64_t chunk = next++; chunk < chunks; chunk = next++) {
      results[chunk] = worker.run_chunk(chunk, s.total);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(work);
  }

  const Worker probe(options, field);
  const auto& catalog = check_catalog();
  std::vector<CheckCounts> counts(catalog.size());
  for (const ChunkResult& r : results) {
    s.triangles_checked += r.triangles;
    s.collinear_skipped += r.collinear;
    s.euler_degenerate += r.euler_degenerate;
    s.omega_degenerate += r.omega_degenerate;
    s.unexpected_errors += r.errors;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      counts[i].passed += r.counts[i].passed;
      counts[i].failed += r.counts[i].failed;
      counts[i].skipped += r.counts[i].skipped;
    }
    for (const auto& ce : r.counterexamples) {
      if (s.counterexamples.size() < options.max_counterexamples) s.counterexamples.push_back(ce);
    }
  }
  for (std::size_t i : probe.selected()) {
    s.check_names.push_back(catalog[i].name);
    s.counts.push_back(counts[i]);
  }
  s.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace chromo
