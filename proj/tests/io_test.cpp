// Copyright 2026 The isoqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isoqubit/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace isoqubit;

TEST(io, net_round_trip) {
  for (int q : {2, 3}) {
    const auto net = build_net_qoutcome(q, q == 2 ? 0.2 : 1.0);
    const std::string text = net_to_json(net);
    const auto back = net_from_json(text);
    EXPECT_EQ(back.q, net.q);
    EXPECT_EQ(back.epsilon, net.epsilon);
    ASSERT_EQ(back.size(), net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
      for (std::size_t z = 0; z < net.members[i].outcomes(); ++z) {
        ASSERT_EQ(back.members[i][z], net.members[i][z]);
      }
    }
    EXPECT_EQ(net_to_json(back), text);
  }
  EXPECT_THROW(net_from_json("{\"q\": 2}"), Error);
  EXPECT_THROW(net_from_json("not json"), Error);
}

TEST(io, code_round_trip) {
  Rng rng(3);
  const auto code = sample_code(4, 70, rng);
  std::ostringstream os;
  write_code(os, code, 1234567890123ULL);
  std::istringstream is(os.str());
  std::uint64_t seed = 0;
  const auto back = read_code(is, &seed);
  EXPECT_EQ(seed, 1234567890123ULL);
  EXPECT_EQ(back.table(), code.table());
  std::istringstream bad("2 8 1\nff\n");
  EXPECT_THROW(read_code(bad), Error);
}

TEST(io, ensemble_round_trip) {
  Rng rng(5);
  const auto e = sample_ensemble(3, 7, rng);
  std::ostringstream os;
  write_ensemble(os, e, 42);
  std::istringstream is(os.str());
  std::uint64_t seed = 0;
  EXPECT_EQ(read_ensemble(is, &seed), e);
  EXPECT_EQ(seed, 42U);
  std::istringstream bad("1 2 0\n00 01\n00 02\n");
  EXPECT_THROW(read_ensemble(bad), Error);
}

TEST(io, device_round_trip) {
  const auto d = sample_device(20, 3, 0.1, 0.01, 77, 88);
  std::ostringstream os;
  write_device(os, d);
  std::istringstream is(os.str());
  const auto back = read_device(is);
  EXPECT_EQ(back.params.n, 20);
  EXPECT_EQ(back.params.k, 3);
  EXPECT_EQ(back.params.theta, d.params.theta);
  EXPECT_EQ(back.params.tau, d.params.tau);
  EXPECT_EQ(back.seed_c, 77U);
  EXPECT_EQ(back.seed_d, 88U);
  EXPECT_EQ(back.code_c.table(), d.code_c.table());
  EXPECT_EQ(back.code_d.table(), d.code_d.table());
  std::ostringstream again;
  write_device(again, back);
  EXPECT_EQ(again.str(), os.str());
}
