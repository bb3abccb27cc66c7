#include "twopaths/derand.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "text_cursor.hpp"

namespace twopaths {

UniversalFamilyLimitsExceeded::UniversalFamilyLimitsExceeded(int m, int r,
                                                             const UniversalLimits& limits)
    : std::runtime_error("no universal family construction for m=" + std::to_string(m) +
                         ", r=" + std::to_string(r) + " within limits (max m " +
                         std::to_string(limits.max_m) + ", max r for the cover " +
                         std::to_string(limits.max_r) + ")"),
      m(m),
      r(r) {}

namespace {

// Pattern of member restricted to the positions of mask, packed low-to-high
// in ascending position order.
std::uint32_t gather(std::uint32_t member, std::uint32_t mask) {
  std::uint32_t pattern = 0;
  int out = 0;
  while (mask) {
    int pos = std::countr_zero(mask);
    mask &= mask - 1;
    pattern |= ((member >> pos) & 1u) << out++;
  }
  return pattern;
}

struct Demand {
  std::uint32_t mask;     // r chosen positions
  std::uint32_t pattern;  // required bits on them, packed ascending
};

// Greedy first-fit cover: seed each new member with the first uncovered
// demand, then fix the free positions one by one, each time keeping the bit
// that newly satisfies more of the still-uncovered demands (ties pick 0).
UniversalFamily greedy_cover(int m, int r) {
  UniversalFamily family;
  family.ground_size = m;
  family.strength = r;

  std::vector<Demand> uncovered;
  // Subsets in Gosper order (ascending as integers), patterns ascending.
  if (r == 0) {
    uncovered.push_back({0, 0});
  } else {
    for (std::uint32_t mask = (1u << r) - 1; mask < (1u << m);) {
      for (std::uint32_t pattern = 0; pattern < (1u << r); ++pattern) {
        uncovered.push_back({mask, pattern});
      }
      std::uint32_t low = mask & (~mask + 1);
      std::uint32_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }

  while (!uncovered.empty()) {
    const Demand seed = uncovered.front();
    std::uint32_t member = 0;
    std::uint32_t assigned = seed.mask;
    {
      // scatter the seed pattern onto its positions
      std::uint32_t mask = seed.mask, pattern = seed.pattern;
      while (mask) {
        int pos = std::countr_zero(mask);
        mask &= mask - 1;
        member |= (pattern & 1u) << pos;
        pattern >>= 1;
      }
    }
    for (int pos = 0; pos < m; ++pos) {
      if ((assigned >> pos) & 1u) continue;
      int gain[2] = {0, 0};
      for (const Demand& d : uncovered) {
        if (!((d.mask >> pos) & 1u)) continue;
        std::uint32_t others = d.mask & ~(1u << pos);
        if ((others & assigned) != others) continue;  // decided later
        // d's pattern bit for pos sits at pos's rank within d.mask.
        int idx = std::popcount(d.mask & ((1u << pos) - 1u));
        std::uint32_t others_pattern = (d.pattern & ((1u << idx) - 1u)) |
                                       ((d.pattern >> (idx + 1)) << idx);
        if (gather(member, others) != others_pattern) continue;
        ++gain[(d.pattern >> idx) & 1u];
      }
      if (gain[1] > gain[0]) member |= 1u << pos;
      assigned |= 1u << pos;
    }
    family.members.push_back(member);
    std::erase_if(uncovered, [&](const Demand& d) {
      return gather(member, d.mask) == d.pattern;
    });
  }
  return family;
}

}  // namespace

UniversalFamily build_universal_family(int m, int r, const UniversalLimits& limits) {
  if (m < 0 || r < 0) throw std::invalid_argument("negative family parameter");
  if (m > limits.max_m) throw UniversalFamilyLimitsExceeded(m, r, limits);
  UniversalFamily family;
  family.ground_size = m;
  family.strength = r;
  if (r >= m) {
    family.members.resize((std::size_t)1 << m);
    for (std::uint32_t i = 0; i < ((std::uint32_t)1 << m); ++i) family.members[i] = i;
    return family;
  }
  if (r > limits.max_r) throw UniversalFamilyLimitsExceeded(m, r, limits);
  return greedy_cover(m, r);
}

bool verify_universal(const UniversalFamily& family) {
  const int m = family.ground_size;
  const int s = std::min(family.strength, m);
  if (m < 0 || m > 31 || family.strength < 0) {
    throw std::invalid_argument("family parameters out of checkable range");
  }
  // C(m, s) subsets, 2^s patterns each, every member inspected per subset.
  long double work = 1.0L;
  for (int i = 0; i < s; ++i) work = work * (long double)(m - i) / (long double)(i + 1);
  work *= std::exp2((long double)s);
  work *= (long double)std::max<std::size_t>(family.members.size(), 1);
  if (work > 2.0e8L) {
    throw std::invalid_argument("family too large to verify exhaustively");
  }
  if (s == 0) return !family.members.empty();

  std::vector<std::uint8_t> seen((std::size_t)1 << s);
  for (std::uint32_t mask = (1u << s) - 1; mask < (1u << m);) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint32_t remaining = 1u << s;
    for (std::uint32_t member : family.members) {
      std::uint8_t& slot = seen[gather(member, mask)];
      if (!slot) {
        slot = 1;
        if (--remaining == 0) break;
      }
    }
    if (remaining != 0) return false;
    std::uint32_t low = mask & (~mask + 1);
    std::uint32_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
    if (s == m) break;  // single subset
  }
  return true;
}

std::string family_to_text(const UniversalFamily& family) {
  std::ostringstream out;
  out << family.ground_size << ' ' << family.strength << '\n';
  for (std::uint32_t member : family.members) {
    for (int pos = 0; pos < family.ground_size; ++pos) {
      out << (((member >> pos) & 1u) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

UniversalFamily family_from_text(std::string_view text) {
  detail::TextCursor cursor{text};
  std::string_view line;
  if (!cursor.next_line(line)) {
    throw ParseError(ParseError::Kind::UnexpectedEnd, cursor.line_no + 1,
                     "missing family header");
  }
  auto header = detail::split_tokens(line);
  if (header.size() != 2) {
    throw ParseError(ParseError::Kind::BadHeader, cursor.line_no,
                     "family header must be 'm r'");
  }
  UniversalFamily family;
  family.ground_size = (int)detail::parse_int_token(header[0], cursor.line_no, "ground size");
  family.strength = (int)detail::parse_int_token(header[1], cursor.line_no, "strength");
  if (family.ground_size > 31) {
    throw ParseError(ParseError::Kind::BadHeader, cursor.line_no,
                     "ground size out of range");
  }
  while (cursor.next_line(line)) {
    auto tokens = detail::split_tokens(line);
    if (tokens.size() != 1 || (int)tokens[0].size() != family.ground_size) {
      throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                       "member must be one bitstring of ground-size length");
    }
    std::uint32_t member = 0;
    for (int pos = 0; pos < family.ground_size; ++pos) {
      char c = tokens[0][(std::size_t)pos];
      if (c != '0' && c != '1') {
        throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                         "member bits must be 0 or 1");
      }
      if (c == '1') member |= 1u << pos;
    }
    family.members.push_back(member);
  }
  return family;
}

SolveResult derandomized_solve(const ProblemInstance& inst, const SolveConfig& config) {
  CasePlan plan = plan_case(inst);
  if (!case_supported(plan.id.kind)) {
    SolveResult result;
    result.status = SolveStatus::Unsupported;
    result.case_id = plan.id;
    return result;
  }
  if (auto screened = feasibility_screen(inst, plan)) return *screened;

  const int m = (int)plan.colorable.size();
  // Any single witness pair constrains at most r colorable edges, so
  // strength min(r, m) already guarantees some member colors them right.
  const int strength = std::min(plan.exponent, m);

  // Families depend only on (m, strength, limits); solving many same-shaped
  // instances should not rebuild them.
  static std::map<std::tuple<int, int, int, int>, UniversalFamily> cache;
  static std::mutex cache_mutex;
  UniversalFamily family;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(m, strength, config.universal.max_m, config.universal.max_r);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, build_universal_family(m, strength, config.universal)).first;
    }
    family = it->second;
  }

  auto fill = [&plan, &family](std::uint64_t trial, std::vector<std::uint8_t>& colors) {
    std::uint32_t member = family.members[(std::size_t)trial];
    for (std::size_t i = 0; i < plan.colorable.size(); ++i) {
      colors[(std::size_t)plan.colorable[i]] =
          ((member >> i) & 1u) ? (std::uint8_t)1 : (std::uint8_t)2;
    }
  };
  SolveConfig effective = config;
  effective.mode = SolveConfig::Mode::Universal;
  SolveResult result = run_colored_trials(inst, plan, family.members.size(), fill, effective);
  result.plan.exponent = strength;
  // The family covers every relevant coloring, so the residual error is
  // whatever the per-trial searches carry: zero unless an Exactly constraint
  // pushed past the deterministic-DP regime (20-vertex search spaces).
  const bool inner_exact = (plan.c1.kind != BoundKind::Exactly &&
                            plan.c2.kind != BoundKind::Exactly) ||
                           inst.graph.vertex_count() <= 20;
  result.plan.delta = inner_exact ? 0.0 : config.delta;
  return result;
}

}  // namespace twopaths
