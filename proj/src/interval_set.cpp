#include "semimod/interval_set.hpp"

#include "semimod/errors.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

namespace semimod {

IntervalUnionSet IntervalUnionSet::from(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& iv) { return iv.empty(); });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });

  IntervalUnionSet out;
  for (const Interval& next : parts) {
    if (out.parts_.empty()) {
      out.parts_.push_back(next);
      continue;
    }
    Interval& cur = out.parts_.back();
    const bool touches =
        next.lo < cur.hi || (next.lo == cur.hi && (cur.hi_closed || next.lo_closed));
    if (!touches) {
      out.parts_.push_back(next);
      continue;
    }
    if (next.lo == cur.lo) cur.lo_closed = cur.lo_closed || next.lo_closed;
    if (next.hi > cur.hi) {
      cur.hi = next.hi;
      cur.hi_closed = next.hi_closed;
    } else if (next.hi == cur.hi) {
      cur.hi_closed = cur.hi_closed || next.hi_closed;
    }
  }
  return out;
}

IntervalUnionSet IntervalUnionSet::closed(const Rational& lo, const Rational& hi) {
  return from({Interval{lo, hi, true, true}});
}

IntervalUnionSet IntervalUnionSet::unite(const IntervalUnionSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from(std::move(all));
}

IntervalUnionSet IntervalUnionSet::intersect(const IntervalUnionSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : parts_) {
    for (const Interval& b : other.parts_) {
      Interval iv;
      if (a.lo > b.lo) {
        iv.lo = a.lo;
        iv.lo_closed = a.lo_closed;
      } else if (b.lo > a.lo) {
        iv.lo = b.lo;
        iv.lo_closed = b.lo_closed;
      } else {
        iv.lo = a.lo;
        iv.lo_closed = a.lo_closed && b.lo_closed;
      }
      if (a.hi < b.hi) {
        iv.hi = a.hi;
        iv.hi_closed = a.hi_closed;
      } else if (b.hi < a.hi) {
        iv.hi = b.hi;
        iv.hi_closed = b.hi_closed;
      } else {
        iv.hi = a.hi;
        iv.hi_closed = a.hi_closed && b.hi_closed;
      }
      if (!iv.empty()) out.push_back(iv);
    }
  }
  return from(std::move(out));
}

IntervalUnionSet IntervalUnionSet::complement_within(const Rational& lo,
                                                     const Rational& hi) const {
  std::vector<Interval> gaps;
  Rational cursor = lo;
  bool cursor_closed = true;
  for (const Interval& iv : parts_) {
    gaps.push_back(Interval{cursor, iv.lo, cursor_closed, !iv.lo_closed});
    cursor = iv.hi;
    cursor_closed = !iv.hi_closed;
  }
  gaps.push_back(Interval{cursor, hi, cursor_closed, true});
  return from(std::move(gaps));
}

bool IntervalUnionSet::within(const Rational& lo, const Rational& hi) const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [&](const Interval& iv) { return iv.lo >= lo && iv.hi <= hi; });
}

Rational IntervalUnionSet::length() const {
  Rational total = 0;
  for (const Interval& iv : parts_) total += iv.hi - iv.lo;
  return total;
}

std::string to_string(const IntervalUnionSet& set) {
  if (set.empty()) return "empty";
  std::string out;
  for (const Interval& iv : set.parts()) {
    if (!out.empty()) out += "U";
    out += iv.lo_closed ? "[" : "(";
    out += to_string(iv.lo) + "," + to_string(iv.hi);
    out += iv.hi_closed ? "]" : ")";
  }
  return out;
}

IntervalUnionSet parse_interval_union(std::string_view text) {
  if (text == "empty") return {};
  std::vector<Interval> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char open = text[pos];
    if (open != '[' && open != '(') {
      throw ParseError(0, pos + 1, "expected '[' or '(' in '" + std::string(text) + "'");
    }
    const auto comma = text.find(',', pos);
    const auto close = text.find_first_of("])", pos);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) {
      throw ParseError(0, pos + 1, "unterminated interval in '" + std::string(text) + "'");
    }
    Interval iv;
    iv.lo_closed = open == '[';
    iv.hi_closed = text[close] == ']';
    iv.lo = parse_rational(text.substr(pos + 1, comma - pos - 1));
    iv.hi = parse_rational(text.substr(comma + 1, close - comma - 1));
    parts.push_back(iv);
    pos = close + 1;
    if (pos < text.size()) {
      if (text[pos] != 'U') {
        throw ParseError(0, pos + 1, "expected 'U' between intervals in '" + std::string(text) + "'");
      }
      ++pos;
    }
  }
  return IntervalUnionSet::from(std::move(parts));
}

Rational interval_length_prob(const IntervalUnionSet& set, const Rational& lo,
                              const Rational& hi) {
  if (!(lo < hi)) throw ParameterError("interval bounds require lo < hi");
  return set.length() / (hi - lo);
}

FiniteCofiniteSet::FiniteCofiniteSet(bool cofinite, std::vector<std::uint64_t> members)
    : cofinite_(cofinite), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

FiniteCofiniteSet FiniteCofiniteSet::finite(std::vector<std::uint64_t> members) {
  return FiniteCofiniteSet(false, std::move(members));
}

FiniteCofiniteSet FiniteCofiniteSet::cofinite(std::vector<std::uint64_t> missing) {
  return FiniteCofiniteSet(true, std::move(missing));
}

namespace {

using Members = std::vector<std::uint64_t>;

Members set_union(const Members& a, const Members& b) {
  Members out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Members set_intersection(const Members& a, const Members& b) {
  Members out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Members set_difference(const Members& a, const Members& b) {
  Members out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

FiniteCofiniteSet FiniteCofiniteSet::unite(const FiniteCofiniteSet& other) const {
  if (!cofinite_ && !other.cofinite_) return finite(set_union(members_, other.members_));
  if (cofinite_ && other.cofinite_) return cofinite(set_intersection(members_, other.members_));
  const auto& fin = cofinite_ ? other : *this;
  const auto& cof = cofinite_ ? *this : other;
  return cofinite(set_difference(cof.members_, fin.members_));
}

FiniteCofiniteSet FiniteCofiniteSet::intersect(const FiniteCofiniteSet& other) const {
  if (!cofinite_ && !other.cofinite_) return finite(set_intersection(members_, other.members_));
  if (cofinite_ && other.cofinite_) return cofinite(set_union(members_, other.members_));
  const auto& fin = cofinite_ ? other : *this;
  const auto& cof = cofinite_ ? *this : other;
  return finite(set_difference(fin.members_, cof.members_));
}

FiniteCofiniteSet FiniteCofiniteSet::complement() const {
  return FiniteCofiniteSet(!cofinite_, members_);
}

std::string to_string(const FiniteCofiniteSet& set) {
  std::string out = set.is_cofinite() ? "cofin{" : "fin{";
  for (std::size_t i = 0; i < set.members().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set.members()[i]);
  }
  return out + "}";
}

FiniteCofiniteSet parse_finite_cofinite(std::string_view text) {
  bool cofinite = false;
  std::string_view body;
  if (text.starts_with("fin{")) {
    body = text.substr(4);
  } else if (text.starts_with("cofin{")) {
    cofinite = true;
    body = text.substr(6);
  } else {
    throw ParseError(0, 1, "expected fin{...} or cofin{...}: '" + std::string(text) + "'");
  }
  if (!body.ends_with('}')) throw ParseError(0, text.size(), "missing '}' in '" + std::string(text) + "'");
  body.remove_suffix(1);
  Members members;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError(0, 0, "invalid member '" + std::string(item) + "'");
    }
    members.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return cofinite ? FiniteCofiniteSet::cofinite(std::move(members))
                  : FiniteCofiniteSet::finite(std::move(members));
}

}  // namespace semimod
