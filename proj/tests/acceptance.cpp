// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algebra_checks.hpp"
#include "convkit/constructions.hpp"
#include "convkit/decoders.hpp"
#include "convkit/metrics.hpp"
#include "convkit/sysrep.hpp"
#include "oracles.hpp"
#include "scenarios.hpp"

using namespace convkit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

FieldPtr field_of_order(std::uint32_t q) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    std::uint32_t power = p;
    for (std::uint32_t N = 1; power <= q; ++N, power *= p)
      if (power == q) return Field::make(p, N);
  }
  throw InvalidArgument("not a prime power");
}

ConvolutionalCode example_code() {
  return ConvolutionalCode::from_generator(parse_poly_matrix(Field::make(2, 1), "1 ; 1 ; 0 1 | 0 0 1 ; 1 ; 1 1"));
}

void example_reproduction(Outcome& o) {
  const auto f = Field::make(2, 1);
  const PolyMatrix G = parse_poly_matrix(f, "1 ; 1 ; 0 1 | 0 0 1 ; 1 ; 1 1");
  const auto C = ConvolutionalCode::from_generator(G);
  const bool lp = is_left_prime(G), rr = is_row_reduced(G);
  const long dfree = free_distance(C).value;
  std::vector<long> dc;
  for (int j = 0; j <= 2; ++j) dc.push_back(column_distance(C, j));
  const PolyMatrix H = parse_poly_matrix(f, "1 ; 1 1 0 1 ; 1 0 1");
  const bool orthogonal = (G * H.transpose()).is_zero();
  const bool generates = same_code(ConvolutionalCode::from_parity_check(H), C);
  o.detail << " left_prime=" << lp << " row_reduced=" << rr << " delta=" << C.degree() << " d_free=" << dfree
           << " d_col=" << dc[0] << "," << dc[1] << "," << dc[2] << " H_accepted=" << (orthogonal && generates);
  o.require(lp && rr, "left prime and row reduced");
  o.require(C.degree() == 3, "delta = 3");
  o.require(dfree == 3, "d_free = 3");
  o.require(dc[0] == 2, "d_0 = 2");
  o.require(dc[1] == 3, "d_1 = 3 (computed d_1 = " + std::to_string(dc[1]) + ")");
  o.require(dc[2] == 3, "d_2 = 3");
  o.require(orthogonal && generates && is_left_prime(H), "H is a parity check");
}

void catastrophic_subcode(Outcome& o) {
  const auto f = Field::make(2, 1);
  const PolyMatrix Gt = parse_poly_matrix(f, "1 1 1 ; 0 1 ; 1 0 1 | 0 0 1 ; 1 ; 1 1");
  const auto Ct = ConvolutionalCode::from_generator(Gt);
  const PolyMatrix H = parse_poly_matrix(f, "1 ; 1 1 0 1 ; 1 0 1");
  const PolyVector w{Poly(f, {1}), Poly(f, {1}), Poly(f, {0, 1})};
  const bool in_kernel = mat_vec(H, w)[0].is_zero();
  const bool in_module = Ct.contains(w).member;
  const PolyVector w2{Poly(f, {1, 1}), Poly(f, {1, 1}), Poly(f, {0, 1, 1})};
  const auto m2 = Ct.contains(w2);
  o.detail << " left_prime=" << is_left_prime(Gt) << " delta=" << Ct.degree() << " witness (1,1,z): ker_H=" << in_kernel
           << " module=" << in_module;
  o.require(!is_left_prime(Gt), "left prime = false");
  o.require(Ct.degree() == 4, "delta = 4");
  o.require(in_kernel && !in_module, "witness separates ker H from the module");
  o.require(m2.member && Ct.encode(*m2.message) == w2, "multiple of the witness is in the module");
}

void justesen(Outcome& o) {
  for (std::uint32_t p : {5u, 7u}) {
    const auto res = justesen_mds(2, Field::make(p, 1));
    const int target = 2 * (res.code.degree() + 1);
    const auto bf = free_distance(res.code, FreeDistanceMethod::BruteForce, target);
    o.detail << " q=" << p << " delta=" << res.code.degree() << " d_free=" << bf.value << " target=" << target;
    o.require(bf.value == target, "q=" + std::to_string(p));
  }
}

void gll(Outcome& o) {
  int checked = 0;
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
    const auto f = field_of_order(q);
    for (std::size_t n = 2; n <= 4 && q >= n + 1; ++n)
      for (int d = 1; d <= static_cast<int>(n) - 1; ++d) {
        const auto res = gll_mds(n, d, f);
        const long df = free_distance(res.code).value;
        const long bound = bounds(res.code).singleton;
        ++checked;
        o.require(df == bound, "q=" + std::to_string(q) + " n=" + std::to_string(n) + " delta=" + std::to_string(d));
      }
  }
  o.detail << " codes=" << checked;
}

std::vector<ConvolutionalCode> mdp_sample() {
  std::mt19937_64 rng(5005);
  const std::vector<std::tuple<std::size_t, std::size_t, int>> params{{2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {3, 2, 1}};
  const std::vector<std::uint32_t> orders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
  std::vector<ConvolutionalCode> codes;
  for (std::size_t i = 0; i < 40; ++i) {
    const auto [n, k, d] = params[i % params.size()];
    codes.push_back(oracle::random_code(field_of_order(orders[i % orders.size()]), n, k, d, rng));
  }
  return codes;
}

void mdp_cross_validation(Outcome& o, const std::vector<ConvolutionalCode>& codes) {
  int mdp = 0;
  for (const auto& C : codes) {
    const bool dist = is_mdp(C, MdpMethod::Distances).holds;
    const bool minors = is_mdp(C, MdpMethod::Minors).holds;
    const bool fl = mdp_criterion_FL(iso_from_code(C).system).holds;
    mdp += dist;
    o.require(dist == minors && minors == fl, format_poly_matrix(C.generator()));
  }
  o.detail << " codes=" << codes.size() << " mdp=" << mdp << " not_mdp=" << codes.size() - mdp;
}

void duality(Outcome& o, const std::vector<ConvolutionalCode>& codes) {
  for (const auto& C : codes) {
    const auto D = dual_code(C);
    o.require(is_mdp(C).holds == is_mdp(D).holds, "mdp " + format_poly_matrix(C.generator()));
    o.require(C.degree() == D.degree(), "degree " + format_poly_matrix(C.generator()));
  }
  o.detail << " codes=" << codes.size();
}

void erasure_guarantee(Outcome& o) {
  const auto C = anp_mdp(2, 1, 2, 2, 4).code;
  o.require(is_mdp(C).holds, "code is MDP");
  Rng rng(7007);
  ErasureDecoderOptions opt;
  opt.terminated = true;
  std::size_t complete = 0, erased = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const SymbolStream s = scenarios::random_codeword_stream(C, 12, rng);
    const ErasureStream w = scenarios::random_admissible_pattern(C, s, 0.3, rng);
    const DecodeReport rep = erasure_decode_forward(C, w, opt);
    erased += w.erasures();
    complete += rep.status == DecodeStatus::Complete && scenarios::corrupted(rep.recovered, s) == 0;
  }
  std::size_t flagged = 0, corrupted = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const SymbolStream s = scenarios::random_codeword_stream(C, 12, rng);
    const std::size_t len = static_cast<std::size_t>(C.L()) + 1 + rng.below(3);
    const std::size_t start = rng.below(s.steps.size() - len + 1);
    ErasureStream w = erase_channel(s, ErasureModel::burst(start, len), 0);
    const ErasureStream background = erase_channel(s, ErasureModel::iid(0.1), rng.next());
    for (std::size_t t = 0; t < s.steps.size(); ++t)
      for (std::size_t i = 0; i < s.n; ++i)
        if (!background.steps[t][i]) w.steps[t][i].reset();
    o.require(!scenarios::windows_admissible(w, C.n(), C.k(), C.L()), "pattern exceeds the bound");
    const DecodeReport rep = erasure_decode_forward(C, w, opt);
    flagged += rep.status != DecodeStatus::Complete;
    corrupted += scenarios::corrupted(rep.recovered, s);
  }
  o.detail << " admissible_complete=" << complete << "/200 erasures=" << erased << " excess_flagged=" << flagged
           << "/20 corrupted_symbols=" << corrupted;
  o.require(complete == 200, "admissible patterns recovered");
  o.require(flagged == 20 && corrupted == 0, "excess patterns flagged without corruption");
}

void block_versus_stream(Outcome& o) {
  const auto C = anp_mdp(2, 1, 2, 2, 4).code;
  Rng rng(8008);
  const SymbolStream s = scenarios::random_codeword_stream(C, 4, rng);
  const ErasureStream w = erase_channel(
      s, ErasureModel::pattern({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {4, 0}, {4, 1}, {5, 0}, {5, 1}}), 0);
  ErasureDecoderOptions opt;
  opt.terminated = true;
  const DecodeReport rep = erasure_decode_forward(C, w, opt);
  std::size_t windows = 0;
  for (const auto& t : rep.trace) {
    if (!t.solved) continue;
    ++windows;
    o.require(2 * t.unknowns == static_cast<std::size_t>(t.j + 1) * C.n(), "window density 50%");
  }
  const auto B = scenarios::vandermonde_block_code(C.field(), 2 * s.steps.size(), s.steps.size());
  std::vector<MaybeSymbol> rx;
  for (const auto& step : w.steps) rx.insert(rx.end(), step.begin(), step.end());
  const auto block = erasure_decode_block(B, rx);
  o.detail << " steps=" << s.steps.size() << " erasures=" << w.erasures() << " stream_status="
           << (rep.status == DecodeStatus::Complete ? "complete" : "incomplete") << " windows=" << windows
           << " block=[" << B.n() << "," << B.k() << "] block_rank=" << block.rank << " block_unknowns=" << block.erasures;
  o.require(rep.status == DecodeStatus::Complete && scenarios::corrupted(rep.recovered, s) == 0, "stream recovered");
  o.require(!block.solved && block.rank < block.erasures, "block decoder rank deficient");
}

void viterbi(Outcome& o) {
  const auto C = example_code();
  Rng rng(9009);
  const int message_degree = 2;
  const std::size_t steps = static_cast<std::size_t>(message_degree) + 3 + 1;
  const auto all = scenarios::all_codewords(C, static_cast<int>(steps) + 1, steps + 5);
  std::size_t decodes = 0, correct = 0, optimal = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const SymbolStream s = scenarios::random_codeword_stream(C, message_degree, rng);
    for (std::size_t t = 0; t < s.steps.size(); ++t)
      for (std::size_t i = 0; i < s.n; ++i) {
        SymbolStream r = s;
        r.steps[t][i] ^= 1;
        const ViterbiResult v = viterbi_decode(C, r);
        ++decodes;
        int degree = -1;
        for (const auto& p : v.codeword) degree = std::max(degree, p.degree());
        correct += static_cast<std::size_t>(degree) < s.steps.size() &&
                   stream_from_codeword(v.codeword, s.steps.size()).steps == s.steps;
        optimal += v.distance == scenarios::nearest_distance(all, r);
      }
  }
  o.detail << " decodes=" << decodes << " transmitted_returned=" << correct << " distance_optimal=" << optimal;
  o.require(correct == decodes, "transmitted codeword returned");
  o.require(optimal == decodes, "distance equals exhaustive minimum");
}

void algebra(Outcome& o) {
  std::mt19937_64 rng(1010);
  const std::vector<std::uint32_t> orders{2, 3, 4, 5, 7, 8};
  std::size_t identities = 0, minors = 0, full_rank = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = field_of_order(orders[static_cast<std::size_t>(trial) % orders.size()]);
    const std::size_t k = 1 + rng() % 3;
    const std::size_t n = k + rng() % (6 - k);
    const PolyMatrix m = oracle::random_poly_matrix(f, k, n, static_cast<int>(rng() % 4), rng);
    const std::string failure = checks::algebra_identities(m);
    identities += failure.empty();
    o.require(failure.empty(), failure);
    if (rank(m) == k) {
      ++full_rank;
      const PolyMatrix U = oracle::random_unimodular(f, k, 3, rng);
      const bool shared = checks::minors_share_constant(m, U * m);
      minors += shared;
      o.require(shared, "minors of an equivalent generator");
    }
  }
  o.detail << " matrices=100 identities_ok=" << identities << " equivalent_pairs=" << full_rank
           << " minors_ok=" << minors;
}

}  // namespace

int main() {
  const auto codes = mdp_sample();
  struct Criterion {
    int id;
    double seconds;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, 1, example_reproduction},
      {2, 1, catastrophic_subcode},
      {3, 10, justesen},
      {4, 60, gll},
      {5, 0, [&](Outcome& o) { mdp_cross_validation(o, codes); }},
      {6, 0, [&](Outcome& o) { duality(o, codes); }},
      {7, 30, erasure_guarantee},
      {8, 0, block_versus_stream},
      {9, 30, viterbi},
      {10, 0, algebra},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.seconds > 0) o.require(secs < c.seconds, "time limit " + std::to_string(c.seconds) + " s");
    failures += !o.pass;
    std::printf("criterion %d: %s (%.2f s)%s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
