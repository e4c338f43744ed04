#include "fpg/oracle.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "fpg/automaton.hpp"
#include "fpg/normal_forms.hpp"
#include "fpg/rates.hpp"
#include "fpg/series.hpp"

namespace fpg {

namespace {

void check_p(int p) {
  if (p < 2) throw Error("p must be at least 2, got " + std::to_string(p));
}

// Emits the preorder text of every p-tree with at most `carets_left` more
// carets, given `slots` unfilled child positions.
void each_tree(int p, std::string& s, int slots, int carets_left,
               const std::function<void(const std::string&)>& emit) {
  if (slots == 0) {
    emit(s);
    return;
  }
  s.push_back('L');
  each_tree(p, s, slots - 1, carets_left, emit);
  s.pop_back();
  if (carets_left > 0) {
    s.push_back('C');
    each_tree(p, s, slots - 1 + p, carets_left - 1, emit);
    s.pop_back();
  }
}

}  // namespace

mpz_class trees_up_to(int p, int n) {
  mpz_class total = 0;
  for (int k = 0; k <= n; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p * k), static_cast<unsigned long>(k));
    total += b / ((p - 1) * k + 1);
  }
  return total;
}

bool is_reduced_positive_tree(int p, const PTree& t) {
  if (t.is_leaf()) return true;
  const PTree* node = &t;
  while (!node->child(static_cast<std::size_t>(p - 1)).is_leaf()) {
    node = &node->child(static_cast<std::size_t>(p - 1));
  }
  for (int k = 0; k < p - 1; ++k) {
    if (!node->child(static_cast<std::size_t>(k)).is_leaf()) return true;
  }
  return false;
}

PositiveCensus enumerate_positive_by_weight(int p, int max_weight, const WeightTable& table,
                                            std::size_t witnesses_per_weight) {
  check_p(p);
  if (max_weight < 0) throw Error("max_weight must be nonnegative");
  const int max_carets = max_weight + 2;
  mpz_class estimate = trees_up_to(p, max_carets);
  if (estimate > kCensusTreeLimit) {
    throw Error("census would examine " + estimate.get_str() + " trees (limit " +
                std::to_string(static_cast<long long>(kCensusTreeLimit)) + ")");
  }
  PositiveCensus c;
  c.p = p;
  c.max_weight = max_weight;
  c.counts.assign(static_cast<std::size_t>(max_weight + 1), 0);
  c.witnesses.resize(static_cast<std::size_t>(max_weight + 1));

  std::string buffer;
  each_tree(p, buffer, 1, max_carets, [&](const std::string& text) {
    ++c.trees_examined;
    PTree t = parse_tree(text, p);
    if (!is_reduced_positive_tree(p, t)) return;
    int weight = 0;
    if (!t.is_leaf()) {
      ClassifiedTree ct = classify(p, t);
      weight = ct.weight(table);
      int right_empty = 0;
      for (const CaretClass& cls : ct.classes) right_empty += cls.kind == CaretKind::RightEmpty;
      c.max_right_empty = std::max(c.max_right_empty, right_empty);
    }
    if (weight > max_weight) return;
    auto w = static_cast<std::size_t>(weight);
    ++c.counts[w];
    if (c.witnesses[w].size() < witnesses_per_weight) c.witnesses[w].push_back(std::move(t));
  });
  return c;
}

BallStats bfs_group_ball(int p, int radius) {
  check_p(p);
  if (radius < 0) throw Error("radius must be nonnegative");
  double estimate = std::pow(xi(p, mpq_class(1, 1000)).midpoint().get_d(), radius);
  if (estimate > kBallLimit) {
    throw Error("ball of radius " + std::to_string(radius) + " estimated at " +
                std::to_string(static_cast<long long>(estimate)) + " elements (limit 10^6)");
  }
  std::vector<std::pair<Letter, TreePair>> gens;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(p); ++i) {
    TreePair g = generator_pair(p, i);
    gens.push_back({Letter{i, 1}, g});
    gens.push_back({Letter{i, -1}, invert(g)});
  }

  BallStats b;
  b.p = p;
  b.radius = radius;
  TreePair id = identity_pair(p);
  b.index.emplace(to_string(id), 0);
  b.elements.push_back({id, 0, {}});
  b.sphere_sizes.push_back(1);
  std::size_t sphere_begin = 0;
  for (int d = 1; d <= radius; ++d) {
    std::size_t sphere_end = b.elements.size();
    for (std::size_t e = sphere_begin; e < sphere_end; ++e) {
      for (const auto& [letter, g] : gens) {
        TreePair prod = compose(b.elements[e].element, g);
        std::string key = to_string(prod);
        if (b.index.count(key)) continue;
        Word geodesic = b.elements[e].geodesic;
        geodesic.push_back(letter);
        b.index.emplace(std::move(key), b.elements.size());
        b.elements.push_back({std::move(prod), d, std::move(geodesic)});
      }
    }
    b.sphere_sizes.push_back(b.elements.size() - sphere_end);
    sphere_begin = sphere_end;
  }
  std::uint64_t total = 0;
  for (std::uint64_t s : b.sphere_sizes) b.ball_sizes.push_back(total += s);
  return b;
}

std::vector<Word> bfs_positive_monoid(int p, std::size_t max_len, std::uint32_t index_bound) {
  check_p(p);
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      std::uint32_t from = out[k].empty() ? 0 : out[k].back().index;
      for (std::uint32_t i = from; i <= index_bound; ++i) {
        Word w = out[k];
        w.push_back(gen(i));
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

bool VerifyReport::all_passed() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream details;

  void fail(const std::string& why) {
    if (passed) details << why;
    passed = false;
  }
};

Word random_word(std::mt19937_64& rng, std::size_t max_len, std::uint32_t max_index) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> idx(0, max_index);
  std::bernoulli_distribution sign(0.5);
  Word w(len(rng));
  for (Letter& l : w) l = {idx(rng), sign(rng) ? 1 : -1};
  return w;
}

RedexChooser random_chooser(std::mt19937_64& rng) {
  return [&rng](std::span<const std::size_t> redexes) {
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    return redexes[pick(rng)];
  };
}

void each_infinite_nf(int p, std::size_t max_len, std::uint32_t max_index, Word& prefix,
                      const std::function<void(const Word&)>& visit) {
  visit(prefix);
  if (prefix.size() == max_len) return;
  for (std::uint32_t i = 0; i <= max_index; ++i) {
    for (int s : {1, -1}) {
      Letter l{i, s};
      if (!prefix.empty() && !is_irreducible_pair(p, prefix.back(), l)) continue;
      prefix.push_back(l);
      each_infinite_nf(p, max_len, max_index, prefix, visit);
      prefix.pop_back();
    }
  }
}

}  // namespace

VerifyReport verify_suite(int p, Profile profile, const WeightTable& table) {
  check_p(p);
  const bool full = profile == Profile::Full;
  VerifyReport report;
  report.p = p;
  report.profile = profile;
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(p));
  const auto P = static_cast<std::uint32_t>(p);

  auto run = [&](const std::string& name, const std::function<void(Outcome&)>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    CheckResult r;
    r.name = name;
    r.passed = o.passed;
    r.details = o.details.str();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  };

  const int radius = full ? 5 : 4;
  BallStats ball;
  run("bfs_ball", [&](Outcome& o) {
    ball = bfs_group_ball(p, radius);
    if (ball.sphere_sizes.size() < 2 || ball.sphere_sizes[1] != 2 * P) {
      o.fail("sphere of radius 1 does not have 2p elements");
    }
    o.details << "ball sizes:";
    for (auto s : ball.ball_sizes) o.details << ' ' << s;
  });

  run("relations", [&](Outcome& o) {
    for (std::uint32_t j = 1; j <= 2 * P; ++j) {
      for (std::uint32_t i = 0; i < j; ++i) {
        Word lhs{gen(j), gen(i)};
        Word rhs{gen(i), gen(j + P - 1)};
        if (!equal(evaluate(p, lhs), evaluate(p, rhs))) {
          o.fail("x" + std::to_string(j) + " x" + std::to_string(i) + " differs from x" +
                 std::to_string(i) + " x" + std::to_string(j + P - 1));
        }
      }
    }
  });

  run("confluence", [&](Outcome& o) {
    const int samples = full ? 10000 : 1000;
    for (int k = 0; k < samples; ++k) {
      Word w = random_word(rng, 10, 2 * P);
      Word a = rewrite(p, w, random_chooser(rng)).result;
      Word b = rewrite(p, w, random_chooser(rng)).result;
      if (a != b) o.fail("'" + format_word(w) + "' has two normal forms");
    }
    o.details << samples << " words";
  });

  run("local_testability", [&](Outcome& o) {
    for (int k = 0; k < 2000; ++k) {
      Word w = random_word(rng, 8, 2 * P);
      bool pairs = true;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        pairs = pairs && is_irreducible_pair(p, w[i], w[i + 1]);
      }
      if (is_infinite_nf(p, w) != pairs) o.fail("'" + format_word(w) + "'");
      if (!is_infinite_nf(p, to_infinite_nf(p, w))) o.fail("reducible result for '" + format_word(w) + "'");
    }
  });

  run("rewriting_soundness", [&](Outcome& o) {
    for (int k = 0; k < (full ? 1000 : 200); ++k) {
      Word w = random_word(rng, 9, 2 * P);
      if (!equal(evaluate(p, w), evaluate(p, to_infinite_nf(p, w)))) {
        o.fail("normal form of '" + format_word(w) + "' is a different element");
      }
      Word v = finite_nf(p, w);
      if (!equal(evaluate(p, w), evaluate(p, v))) {
        o.fail("finite normal form of '" + format_word(w) + "' is a different element");
      }
    }
  });

  run("bar_unbar_round_trip", [&](Outcome& o) {
    std::size_t words = 0;
    std::set<Word> images;
    Word prefix;
    each_infinite_nf(p, full ? (p <= 3 ? 7 : 6) : 5, 2 * P, prefix, [&](const Word& w) {
      ++words;
      Word v = bar(p, w);
      if (!is_in_Lp(p, v)) o.fail("bar('" + format_word(w) + "') is not in L_p");
      else if (unbar(p, v) != w) o.fail("unbar(bar('" + format_word(w) + "')) differs");
      images.insert(std::move(v));
    });
    if (images.size() != words) o.fail("bar is not injective");
    o.details << (o.passed ? "" : "; ") << words << " words";
  });

  run("Lp_injectivity", [&](Outcome& o) {
    std::set<std::string> elements;
    std::size_t words = 0;
    std::vector<Word> layer{Word{}};
    for (std::size_t n = 0; n <= (full ? 5u : 4u); ++n) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        if (!is_in_Lp(p, w)) continue;
        ++words;
        elements.insert(to_string(evaluate(p, w)));
        for (std::uint32_t i = 0; i < P; ++i) {
          for (int s : {1, -1}) {
            Word x = w;
            x.push_back({i, s});
            next.push_back(std::move(x));
          }
        }
      }
      layer = std::move(next);
    }
    if (elements.size() != words) {
      o.fail(std::to_string(words - elements.size()) + " collisions");
    }
    o.details << (o.passed ? "" : "; ") << words << " words";
  });

  run("finite_nf_uniqueness", [&](Outcome& o) {
    const int r = full ? 4 : 3;
    std::set<Word> forms;
    std::size_t count = 0;
    for (const BallEntry& e : ball.elements) {
      if (e.distance > r) break;
      ++count;
      Word v = finite_nf(p, e.geodesic);
      Word padded = e.geodesic;
      std::uniform_int_distribution<std::size_t> at(0, padded.size());
      Letter l{static_cast<std::uint32_t>(rng() % (2 * P)), 1};
      auto pos = padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(at(rng)), l.inverse());
      padded.insert(pos, l);
      if (finite_nf(p, padded) != v || finite_nf(p, to_infinite_nf(p, e.geodesic)) != v) {
        o.fail("representatives of '" + format_word(e.geodesic) + "' disagree");
      }
      if (!equal(evaluate(p, v), e.element)) o.fail("'" + format_word(v) + "' evaluates wrongly");
      forms.insert(std::move(v));
    }
    if (forms.size() != count) o.fail("finite normal form is not injective");
    o.details << (o.passed ? "" : "; ") << count << " elements";
  });

  run("fordham_vs_bfs", [&](Outcome& o) {
    std::size_t positives = 0, mismatches = 0;
    for (const BallEntry& e : ball.elements) {
      if (!is_positive(e.element)) continue;
      ++positives;
      int len = positive_length(e.element, table);
      if (len != e.distance) {
        if (mismatches == 0) {
          o.fail("'" + format_word(e.geodesic) + "': weight " + std::to_string(len) +
                 ", distance " + std::to_string(e.distance));
        }
        ++mismatches;
      }
    }
    o.details << (o.passed ? "" : "; ") << positives << " positive elements, " << mismatches
              << " mismatches";
  });

  run("census_vs_series", [&](Outcome& o) {
    const int W = full ? (p == 2 ? 12 : 6) : (p == 2 ? 8 : 5);
    PositiveCensus c = enumerate_positive_by_weight(p, W, table);
    GrowthSeriesBundle b = positive_growth_series(p, static_cast<std::size_t>(W + 1));
    for (int w = 0; w <= W; ++w) {
      mpq_class got(static_cast<unsigned long>(c.counts[static_cast<std::size_t>(w)]));
      if (got != b.S[static_cast<std::size_t>(w)]) {
        o.fail("weight " + std::to_string(w) + ": census " + got.get_str() + ", series " +
               b.S[static_cast<std::size_t>(w)].get_str());
      }
    }
    o.details << (o.passed ? "" : "; ") << "weights <= " << W << ", " << c.trees_examined
              << " trees";
  });

  run("right_empty_scan", [&](Outcome& o) {
    PositiveCensus c = enumerate_positive_by_weight(p, full ? 6 : 4, table);
    if (c.max_right_empty > 1) {
      o.fail(std::to_string(c.max_right_empty) + " R_empty carets in one tree");
    }
  });

  run("automaton_triple", [&](Outcome& o) {
    const std::size_t N = 40;
    PowerSeries phi = phi_series(p, N + 1);
    auto paths = count_paths_by_state(p, N);
    for (std::size_t n = 0; n <= N; ++n) {
      mpz_class total = 0;
      for (const mpz_class& c : paths[n]) total += c;
      if (mpq_class(total) != phi[n]) o.fail("paths and closed form differ at n=" + std::to_string(n));
      double words = std::pow(2.0 * p, static_cast<double>(n));
      if (words <= (full ? kBruteForceLimit : 1e5)) {
        if (count_language_bruteforce(p, n) != total) {
          o.fail("brute force differs at n=" + std::to_string(n));
        }
      }
    }
  });

  run("series_residuals", [&](Outcome& o) {
    GrowthSeriesBundle b = positive_growth_series(p, full ? 30 : 20);
    for (const NamedResidual& r : series_residuals(b)) {
      if (!r.value.is_zero()) o.fail(r.name + " residual is nonzero");
    }
    if (!(b.S == b.S_product)) o.fail("S differs from its product form");
  });

  run("rate_enclosures", [&](Outcome& o) {
    RateResult z = zeta(p);
    if (!(z.lo > p && z.hi < mpq_class(2 * p + 1, 2))) o.fail("zeta outside (p, p+1/2)");
    if (!zeta_y_form_brackets(z)) o.fail("y-form has no sign change on the zeta enclosure");
    if (abs(z.midpoint() - zeta_y(p).midpoint()) > 2 * kDefaultTolerance) {
      o.fail("zeta equation forms disagree");
    }
    RateResult x = xi(p);
    if (abs(x.midpoint() - xi_y(p).midpoint()) > 2 * kDefaultTolerance ||
        abs(x.midpoint() - xi_direct(p).midpoint()) > 2 * kDefaultTolerance) {
      o.fail("xi equation forms disagree");
    }
    if (!(x.hi < 2 * p - 1)) o.fail("xi not below 2p-1");
    if (p == 2 && !(z.lo > mpq_class(224, 100) && z.hi < mpq_class(225, 100))) {
      o.fail("zeta_2 outside (2.24, 2.25)");
    }
    static const char* table_values[] = {"2.618033989", "4.079595623", "5.530132718",
                                         "6.977144180"};
    if (p <= 5 && abs(x.midpoint() - parse_rational(table_values[p - 2])) > mpq_class(1, 1000000)) {
      o.fail("xi differs from the tabulated value");
    }
    o.details << (o.passed ? "" : "; ") << "zeta ~ " << to_decimal(z.midpoint(), 9)
              << ", xi ~ " << to_decimal(x.midpoint(), 9);
  });

  run("growth_sandwich", [&](Outcome& o) {
    for (int n = 0; n <= radius; ++n) {
      mpz_class words = count_paths(p, static_cast<std::size_t>(n));
      if (words > static_cast<unsigned long>(ball.ball_sizes.at(static_cast<std::size_t>(n)))) {
        o.fail("more L_p words of length " + std::to_string(n) + " than elements in B(n)");
      }
    }
  });

  run("submultiplicativity", [&](Outcome& o) {
    for (int m = 0; m <= radius; ++m) {
      for (int n = 0; m + n <= radius; ++n) {
        auto g = [&](int k) {
          return mpz_class(static_cast<unsigned long>(ball.ball_sizes.at(static_cast<std::size_t>(k))));
        };
        if (g(m + n) > g(m) * g(n)) o.fail("gamma is not submultiplicative");
      }
    }
  });

  return report;
}

}  // namespace fpg
