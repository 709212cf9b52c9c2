#include <doctest.h>

#include <random>
#include <set>

#include "posetenum/cursor.hpp"

using namespace posetenum;

TEST_CASE("cursor membership follows adds and removes") {
  Cursor c(6);
  c.add(3);
  c.add(1);
  c.add(5);
  CHECK(c.size() == 3);
  CHECK(c.contains(1));
  CHECK_FALSE(c.contains(0));
  c.remove(1);
  CHECK_FALSE(c.contains(1));
  CHECK(c.sorted() == std::vector<Element>{3, 5});
}

TEST_CASE("cursor agrees with std::set under random operations") {
  std::mt19937_64 rng(11);
  Cursor c(40);
  std::set<Element> ref;
  for (int step = 0; step < 5000; ++step) {
    const Element u = static_cast<Element>(rng() % 40);
    if (ref.count(u)) {
      c.remove(u);
      ref.erase(u);
    } else {
      c.add(u);
      ref.insert(u);
    }
    REQUIRE(c.size() == static_cast<int>(ref.size()));
  }
  CHECK(c.sorted() == std::vector<Element>(ref.begin(), ref.end()));
}

TEST_CASE("take_delta reports the net change only") {
  Cursor c(8);
  c.set_tracking(true);
  c.add(2);
  c.add(4);
  Delta d = c.take_delta();
  CHECK(d.added == 2);
  CHECK(d.removed == 0);
  CHECK(std::vector<Element>(d.plus().begin(), d.plus().end()) == std::vector<Element>{2, 4});

  // 4 removed then re-added cancels; 6 added then removed cancels.
  c.remove(4);
  c.add(6);
  c.add(4);
  c.remove(6);
  c.remove(2);
  c.add(7);
  d = c.take_delta();
  CHECK(std::vector<Element>(d.plus().begin(), d.plus().end()) == std::vector<Element>{7});
  CHECK(std::vector<Element>(d.minus().begin(), d.minus().end()) == std::vector<Element>{2});

  CHECK(c.take_delta().size() == 0);
}

TEST_CASE("take_delta refuses changes above three") {
  Cursor c(8);
  c.set_tracking(true);
  for (Element u : {0, 1, 2, 3}) c.add(u);
  CHECK_THROWS_AS(c.take_delta(), GrayBoundError);
}

TEST_CASE("take_change has no size limit") {
  Cursor c(10);
  c.set_tracking(true);
  for (Element u = 0; u < 10; ++u) c.add(u);
  Change ch = c.take_change();
  CHECK(ch.added.size() == 10);
  for (Element u = 0; u < 5; ++u) c.remove(u);
  ch = c.take_change();
  CHECK(ch.added.empty());
  CHECK(ch.removed == std::vector<Element>{0, 1, 2, 3, 4});
}

TEST_CASE("apply_delta and apply_change keep sets sorted") {
  std::vector<Element> s = {1, 3, 5};
  Delta d;
  d.items = {4, 0, 3};
  d.added = 2;
  d.removed = 1;
  apply_delta(s, d);
  CHECK(s == std::vector<Element>{0, 1, 4, 5});
  apply_change(s, Change{{9}, {0, 5}});
  CHECK(s == std::vector<Element>{1, 4, 9});
}

TEST_CASE("formatting uses original labels") {
  // 2 < 0 forces a relabel: internal ids 0, 1, 2 carry labels 1, 2, 0.
  const Poset p = load_poset("poset 3\nrel 2 0\n");
  CHECK(format_set(p, std::vector<Element>{}) == ".");
  std::vector<Element> all = {0, 1, 2};
  CHECK(format_set(p, all) == "0 1 2");
  Element lab0 = 0, lab2 = 0;
  for (Element u = 0; u < 3; ++u) {
    if (p.label(u) == 0) lab0 = u;
    if (p.label(u) == 2) lab2 = u;
  }
  CHECK(p.less(lab2, lab0));
  CHECK(format_delta(p, std::vector<Element>{lab2}, std::vector<Element>{lab0}) == "+2 -0");
}
