#include "crossbial/braiding.hpp"

#include <numeric>

#include "crossbial/error.hpp"
#include "crossbial/structures.hpp"

namespace crossbial {

LinMap block_swap(const SpaceList& x, const SpaceList& y) {
  SpaceList all = x;
  all.insert(all.end(), y.begin(), y.end());
  std::vector<int> perm;
  const int a = static_cast<int>(x.size());
  const int b = static_cast<int>(y.size());
  for (int i = 0; i < b; ++i) perm.push_back(a + i);
  for (int i = 0; i < a; ++i) perm.push_back(i);
  return permutation(all, perm);
}

namespace {

SpaceList cat(const SpaceList& a, const SpaceList& b) {
  SpaceList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

LinMap id(const SpaceList& s) { return LinMap::identity(s); }

std::string key_of(const SpaceList& s) {
  std::string k;
  for (const auto& x : s) k += x.name + "#" + std::to_string(x.dim) + ",";
  return k;
}

}  // namespace

YDStructure tensor_structure(const YDStructure& x, const YDStructure& y, const BiunitalPair& host, Side side) {
  const SpaceList h{host.space};
  const SpaceList& xs = x.spaces;
  const SpaceList& ys = y.spaces;
  YDStructure out;
  out.spaces = cat(xs, ys);
  if (side == Side::Right) {
    LinMap split = tensor(id(cat(xs, ys)), host.delta);
    LinMap route = tensor(tensor(id(xs), block_swap(ys, h)), id(h));
    out.action = compose(tensor(x.action, y.action), compose(route, split));
    LinMap co = tensor(x.coaction, y.coaction);
    LinMap route2 = tensor(tensor(id(xs), block_swap(h, ys)), id(h));
    out.coaction = compose(tensor(id(cat(xs, ys)), host.m), compose(route2, co));
  } else {
    LinMap split = tensor(host.delta, id(cat(xs, ys)));
    LinMap route = tensor(tensor(id(h), block_swap(h, xs)), id(ys));
    out.action = compose(tensor(x.action, y.action), compose(route, split));
    LinMap co = tensor(x.coaction, y.coaction);
    LinMap route2 = tensor(tensor(id(h), block_swap(xs, h)), id(ys));
    out.coaction = compose(tensor(host.m, id(cat(xs, ys))), compose(route2, co));
  }
  return out;
}

LinMap yd_braiding(const YDStructure& x, const YDStructure& y, const BiunitalPair& host, Side side) {
  const SpaceList h{host.space};
  if (side == Side::Right) {
    LinMap step1 = tensor(id(x.spaces), y.coaction);
    LinMap step2 = tensor(block_swap(x.spaces, y.spaces), id(h));
    LinMap step3 = tensor(id(y.spaces), x.action);
    return compose(step3, compose(step2, step1));
  }
  LinMap step1 = tensor(x.coaction, id(y.spaces));
  LinMap step2 = tensor(id(h), block_swap(x.spaces, y.spaces));
  LinMap step3 = tensor(y.action, id(x.spaces));
  return compose(step3, compose(step2, step1));
}

BraidingProvider BraidingProvider::vect_flip() { return BraidingProvider(); }

BraidingProvider BraidingProvider::yetter_drinfeld(BiunitalPair host, Side side) {
  BraidingProvider bp;
  bp.kind_ = BraidingKind::YetterDrinfeld;
  bp.side_ = side;
  bp.host_ = std::make_shared<const BiunitalPair>(std::move(host));
  return bp;
}

const BiunitalPair& BraidingProvider::host() const {
  if (!host_) fail(ErrorKind::Configuration, "flip braiding has no host Hopf algebra");
  return *host_;
}

void BraidingProvider::register_space(const SpaceLabel& x, LinMap action, LinMap coaction) {
  if (kind_ == BraidingKind::VectFlip) return;
  if (spaces_.count(x.name)) fail(ErrorKind::Configuration, "space " + x.name + " registered twice");
  CheckReport r = check_crossed_module(x, action, coaction, *host_, side_);
  if (!r.pass())
    fail(ErrorKind::Configuration, "space " + x.name + " is not a crossed module: " + r.first_failure()->name);
  spaces_[x.name] = YDStructure{SpaceList{x}, std::move(action), std::move(coaction)};
  cache_ = std::make_shared<Cache>();
}

bool BraidingProvider::is_registered(const SpaceLabel& x) const {
  if (kind_ == BraidingKind::VectFlip) return true;
  auto it = spaces_.find(x.name);
  return it != spaces_.end() && it->second.spaces[0] == x;
}

const YDStructure& BraidingProvider::structure(const SpaceLabel& x) const {
  auto it = spaces_.find(x.name);
  if (kind_ == BraidingKind::VectFlip || it == spaces_.end() || !(it->second.spaces[0] == x))
    fail(ErrorKind::Configuration, "space " + x.name + " is not registered with the braiding provider");
  return it->second;
}

YDStructure BraidingProvider::structure(const SpaceList& xs) const {
  if (xs.empty()) {
    const SpaceList h{host().space};
    YDStructure unit;
    if (side_ == Side::Right) {
      unit.action = host().eps.relabel(h, {});
      unit.coaction = host().eta;
    } else {
      unit.action = host().eps;
      unit.coaction = host().eta;
    }
    return unit;
  }
  YDStructure acc = structure(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) acc = tensor_structure(acc, structure(xs[i]), host(), side_);
  return acc;
}

LinMap BraidingProvider::braiding(const SpaceLabel& x, const SpaceLabel& y) const {
  return braiding(SpaceList{x}, SpaceList{y});
}

LinMap BraidingProvider::inverse_braiding(const SpaceLabel& x, const SpaceLabel& y) const {
  return inverse_braiding(SpaceList{x}, SpaceList{y});
}

LinMap BraidingProvider::braiding(const SpaceList& x, const SpaceList& y) const {
  if (kind_ == BraidingKind::VectFlip) return block_swap(x, y);
  const std::string key = "+" + key_of(x) + "|" + key_of(y);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->maps.find(key);
    if (it != cache_->maps.end()) return it->second;
  }
  LinMap psi = yd_braiding(structure(x), structure(y), host(), side_);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->maps.emplace(key, psi);
  return psi;
}

LinMap BraidingProvider::inverse_braiding(const SpaceList& x, const SpaceList& y) const {
  if (kind_ == BraidingKind::VectFlip) return block_swap(y, x);
  const std::string key = "-" + key_of(x) + "|" + key_of(y);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->maps.find(key);
    if (it != cache_->maps.end()) return it->second;
  }
  LinMap inv = invert(braiding(x, y));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->maps.emplace(key, inv);
  return inv;
}

}  // namespace crossbial
