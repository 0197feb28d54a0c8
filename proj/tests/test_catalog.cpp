// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <fstream>

#include "pfmatroid/catalog.hpp"
#include "pfmatroid/io.hpp"
#include "test_util.hpp"

using namespace pfm;

TEST_CASE("every representation entry verifies for its partial field") {
  for (const auto& name : catalog::names()) {
    auto e = catalog::get(name);
    if (!e.rep) continue;
    CAPTURE(name);
    CHECK(verify_rep(*e.rep).ok);
  }
}

TEST_CASE("expected structure matches the computed matroid") {
  for (const auto& name : catalog::names()) {
    if (name == "counterexample-r9-q3") continue;  // covered by acceptance
    auto e = catalog::get(name);
    CAPTURE(name);
    if (e.rep && e.expect_bases) {
      Matroid m = matroid_of(*e.rep);
      CHECK(m.rank_value() == *e.expect_rank);
      CHECK(m.size() == *e.expect_elements);
      CHECK(m.num_bases() == *e.expect_bases);
    }
    if (e.matroid && e.expect_bases) {
      CHECK(e.matroid->rank_value() == *e.expect_rank);
      CHECK(e.matroid->size() == *e.expect_elements);
      CHECK(e.matroid->num_bases() == *e.expect_bases);
    }
  }
}

TEST_CASE("the two nine-point coordinatizations agree with the configuration") {
  Matroid skew = matroid_of(*catalog::get("nonpappus-skew").rep);
  Matroid m2q = matroid_of(*catalog::get("nonpappus-m2q").rep);
  Matroid config = *catalog::get("nonpappus-matroid").matroid;
  CHECK(skew == m2q);  // same labels, same bases
  CHECK(skew.is_isomorphic(config).has_value());
}

TEST_CASE("the unwrapped entry is the block expansion of the m2q entry") {
  RMatrix flat = *catalog::get("nonpappus-unwrapped").matrix;
  CHECK(catalog::get("nonpappus-m2q").rep->mat.unwrap() == flat);
}

TEST_CASE("both readings of the group geometry give the same matroid") {
  Matroid h = matroid_of(*catalog::get("dowling-q8-H").rep);
  Matroid r3 = matroid_of(*catalog::get("dowling-q8-r3").rep);
  auto witness = h.is_isomorphic(r3);
  REQUIRE(witness.has_value());
  CHECK(h == r3);  // in fact label-for-label equal
}

TEST_CASE("the zero-divisor identity of the finite quaternion algebra") {
  auto R3 = Ring::gf3_quaternion();
  const BaseField& f = R3->base();
  RElem x = R3->quaternion_elem(f.one(), f.one(), f.one(), f.zero());
  RElem y =
      R3->quaternion_elem(f.one(), f.from_long(-1), f.from_long(-1), f.zero());
  CHECK((x * y).is_zero());
}

TEST_CASE("every entry round-trips through serialization") {
  for (const auto& name : catalog::names()) {
    auto e = catalog::get(name);
    CAPTURE(name);
    io::json doc = io::catalog_entry_to_json(e);
    io::json reparsed = io::json::parse(doc.dump());
    if (e.rep) {
      ChainGroupRep back = io::rep_from_json(reparsed);
      CHECK(back.mat == e.rep->mat);
      CHECK(back.pf == e.rep->pf);
      CHECK(back.form == e.rep->form);
    } else if (e.matrix) {
      ChainGroupRep back = io::rep_from_json(reparsed);
      CHECK(back.mat == *e.matrix);
    } else if (e.matroid) {
      CHECK(io::matroid_from_json(reparsed) == *e.matroid);
    } else if (e.chains) {
      catalog::ChainSet back = io::chainset_from_json(reparsed);
      CHECK(back.pf == e.chains->pf);
      CHECK(back.matroid == e.chains->matroid);
      CHECK(back.chains.size() == e.chains->chains.size());
      for (size_t i = 0; i < back.chains.size(); ++i) {
        CHECK(back.chains[i] == e.chains->chains[i]);
      }
    }
  }
}

TEST_CASE("shipped data files match the built-in entries") {
  // Regenerate with: pfmatroid catalog dump --dir data/catalog
  const char* dirs[] = {"data/catalog", "../data/catalog", "../../data/catalog"};
  std::string dir;
  for (const char* d : dirs) {
    std::ifstream probe(std::string(d) + "/u23.json");
    if (probe) {
      dir = d;
      break;
    }
  }
  REQUIRE_MESSAGE(!dir.empty(), "data/catalog not found from test cwd");
  for (const auto& name : catalog::names()) {
    CAPTURE(name);
    io::json on_disk = io::parse_file(dir + "/" + name + ".json");
    io::json built = io::catalog_entry_to_json(catalog::get(name));
    CHECK(on_disk == built);
  }
}

TEST_CASE("unknown names are rejected") {
  CHECK_THROWS_AS(catalog::get("no-such-entry"), DomainError);
}
