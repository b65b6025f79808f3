#include "crossbial/diagram.hpp"

#include <algorithm>

#include "crossbial/error.hpp"

namespace crossbial {

Diagram::Diagram(SpaceList inputs, const BraidingProvider* bp)
    : bp_(bp), flip_(BraidingProvider::vect_flip()), inputs_(inputs), wires_(std::move(inputs)) {}

Diagram& Diagram::row(std::vector<Box> boxes) {
  Row r;
  r.in = wires_;
  std::size_t pos = 0;
  const BraidingProvider& bp = bp_ ? *bp_ : flip_;
  auto take = [&](int n) {
    if (pos + n > wires_.size())
      fail(ErrorKind::Shape, "diagram row consumes more wires than available (" + describe(wires_) + ")");
    SpaceList s(wires_.begin() + pos, wires_.begin() + pos + n);
    pos += n;
    return s;
  };
  for (const Box& b : boxes) {
    switch (b.kind) {
      case Box::Kind::Id: {
        SpaceList s = take(b.count);
        for (const auto& w : s) {
          r.slots.push_back(Slot{1, 1, nullptr});
          r.out.push_back(w);
        }
        break;
      }
      case Box::Kind::Map: {
        SpaceList s = take(static_cast<int>(b.map->dom().size()));
        if (!(s == b.map->dom()))
          fail(ErrorKind::Shape, "diagram box expects " + describe(b.map->dom()) + " but wires carry " + describe(s));
        r.slots.push_back(Slot{static_cast<int>(s.size()), static_cast<int>(b.map->cod().size()), b.map});
        r.out.insert(r.out.end(), b.map->cod().begin(), b.map->cod().end());
        break;
      }
      case Box::Kind::Braid:
      case Box::Kind::InverseBraid:
      case Box::Kind::Flip: {
        SpaceList s = take(2);
        LinMap m;
        if (b.kind == Box::Kind::Flip) m = flip(s[0], s[1]);
        else if (b.kind == Box::Kind::Braid) m = bp.braiding(s[0], s[1]);
        else m = bp.inverse_braiding(s[1], s[0]);
        r.slots.push_back(Slot{2, 2, std::make_shared<const LinMap>(std::move(m))});
        r.out.push_back(s[1]);
        r.out.push_back(s[0]);
        break;
      }
    }
  }
  if (pos != wires_.size())
    fail(ErrorKind::Shape, "diagram row leaves wires unconsumed (" + describe(wires_) + ")");
  wires_ = r.out;
  rows_.push_back(std::move(r));
  return *this;
}

namespace {

struct StateTerm {
  std::uint64_t index;
  Scalar value;
};

void normalize(std::vector<StateTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const StateTerm& a, const StateTerm& b) { return a.index < b.index; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::uint64_t idx = terms[i].index;
    Scalar acc = std::move(terms[i].value);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].index == idx; ++j) acc += terms[j].value;
    if (!acc.is_zero()) terms[w++] = StateTerm{idx, std::move(acc)};
    i = j;
  }
  terms.resize(w);
}

}  // namespace

std::vector<Diagram::Term> Diagram::evaluate_wide(std::vector<Diagram::Term> input) const {
  std::vector<StateTerm> state;
  state.reserve(input.size());
  for (auto& e : input) state.push_back({e.first, std::move(e.second)});

  std::vector<std::pair<std::uint64_t, Scalar>> partial, next_partial;
  for (const Row& r : rows_) {
    const std::size_t nin = r.in.size();
    std::vector<std::uint64_t> in_weight(nin), out_weight(r.out.size());
    {
      std::uint64_t w = 1;
      for (std::size_t i = nin; i-- > 0;) {
        in_weight[i] = w;
        w *= r.in[i].dim;
      }
      w = 1;
      for (std::size_t i = r.out.size(); i-- > 0;) {
        out_weight[i] = w;
        w *= r.out[i].dim;
      }
    }
    std::vector<StateTerm> next;
    std::vector<int> digits(nin);
    for (const StateTerm& t : state) {
      std::uint64_t idx = t.index;
      for (std::size_t i = nin; i-- > 0;) {
        digits[i] = static_cast<int>(idx % r.in[i].dim);
        idx /= r.in[i].dim;
      }
      partial.clear();
      partial.emplace_back(0, t.value);
      std::size_t ip = 0, op = 0;
      bool dead = false;
      for (const Slot& s : r.slots) {
        if (!s.map) {
          std::uint64_t add = static_cast<std::uint64_t>(digits[ip]) * out_weight[op];
          for (auto& p : partial) p.first += add;
          ++ip;
          ++op;
          continue;
        }
        std::uint64_t sub = 0;
        for (int k = 0; k < s.nin; ++k) sub = sub * r.in[ip + k].dim + digits[ip + k];
        const Column& col = s.map->column(sub);
        if (col.empty()) {
          dead = true;
          break;
        }
        next_partial.clear();
        for (const auto& e : col) {
          // spread the box output index over its output wires
          std::uint64_t off = 0;
          std::uint64_t rest = e.row;
          for (int k = s.nout; k-- > 0;) {
            off += (rest % r.out[op + k].dim) * out_weight[op + k];
            rest /= r.out[op + k].dim;
          }
          for (const auto& p : partial) next_partial.emplace_back(p.first + off, p.second * e.value);
        }
        std::swap(partial, next_partial);
        ip += s.nin;
        op += s.nout;
      }
      if (dead) continue;
      for (auto& p : partial) next.push_back(StateTerm{p.first, std::move(p.second)});
    }
    normalize(next);
    state = std::move(next);
    if (state.empty()) break;
  }
  std::vector<Diagram::Term> out;
  out.reserve(state.size());
  for (auto& t : state) out.emplace_back(t.index, std::move(t.value));
  return out;
}

Column Diagram::evaluate(const Column& input) const {
  std::vector<Diagram::Term> in;
  in.reserve(input.size());
  for (const auto& e : input) in.emplace_back(e.row, e.value);
  Column out;
  for (auto& t : evaluate_wide(std::move(in))) out.push_back(Entry{static_cast<std::uint32_t>(t.first), std::move(t.second)});
  return out;
}

LinMap Diagram::evaluate() const {
  LinMap out(inputs_, wires_);
  if (total_dim(wires_) > 0xFFFFFFFFULL) fail(ErrorKind::Shape, "diagram output too large");
  for (std::uint64_t c = 0; c < out.cols(); ++c) {
    Column in{Entry{static_cast<std::uint32_t>(c), Scalar(1)}};
    out.set_column(c, evaluate(in));
  }
  return out;
}

}  // namespace crossbial
