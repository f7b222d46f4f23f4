#pragma once

#include <initializer_list>
#include <vector>

#include "alexq/closure_map.hpp"
#include "alexq/topology.hpp"
#include "brute_force.hpp"

namespace testing {

using alexq::Mask;

inline Mask bits(std::initializer_list<int> points) {
  Mask m = 0;
  for (int p : points) m |= Mask{1} << p;
  return m;
}

inline alexq::FiniteTopology topology(std::size_t n, std::vector<Mask> opens) {
  return alexq::FiniteTopology(alexq::SetFamily(alexq::PointUniverse::indexed(n), std::move(opens)));
}

// Opens {∅, {1}, {0,1}}: 0 is closed, 1 is open.
inline alexq::FiniteTopology sierpinski() { return topology(2, {0, bits({1}), bits({0, 1})}); }

// Opens {∅, {2}, {1,2}, {0,1,2}}: point closures cl({i}) = {0..i}.
inline alexq::FiniteTopology chain3() { return topology(3, {0, bits({2}), bits({1, 2}), bits({0, 1, 2})}); }

inline alexq::PointClosureMap closure_map(std::size_t n, std::vector<Mask> images) {
  return alexq::PointClosureMap(alexq::PointUniverse::indexed(n), std::move(images));
}

inline brute::Set to_set(Mask m) {
  brute::Set s;
  for (int i = 0; i < 64; ++i) {
    if ((m >> i) & 1U) s.insert(i);
  }
  return s;
}

inline brute::Family to_family(const alexq::FiniteTopology& t) {
  brute::Family f;
  for (Mask o : t.opens().sets()) f.insert(to_set(o));
  return f;
}

}  // namespace testing
