// Copyright 2026 The topnn Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topnn/pipeline/trainer.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "support/fixtures.h"
#include "topnn/error.h"
#include "topnn/io.h"
#include "topnn/pipeline/decoding.h"

namespace topnn::pipeline {
namespace {

const testing::ToyCorpus& corpus8() {
  static const testing::ToyCorpus c = testing::toy_corpus(8, 3);
  return c;
}

TEST(Trainer, ZeroLearningRateKeepsInitialParameters) {
  const testing::ToyCorpus& c = corpus8();
  model::ModelParams init = model::ModelParams::initialize(c.config(6, 4, 8), 2);
  model::round_to_float32(init);
  TrainConfig tc;
  tc.epochs = 2;
  tc.learning_rate = 0.0;
  const TrainResult r = train(init, tc, c.instances);
  EXPECT_TRUE(r.params == init);
  ASSERT_EQ(r.epoch_losses.size(), 2u);
  EXPECT_EQ(r.epoch_losses[0], r.epoch_losses[1]);
}

TEST(Trainer, SameSeedSameLossLog) {
  const testing::ToyCorpus& c = corpus8();
  TrainConfig tc;
  tc.epochs = 3;
  tc.batch_size = 2;
  tc.learning_rate = 0.01;
  const TrainResult a = train(c.config(6, 4, 8), tc, c.instances);
  const TrainResult b = train(c.config(6, 4, 8), tc, c.instances);
  EXPECT_EQ(a.epoch_losses, b.epoch_losses);
  EXPECT_TRUE(a.params == b.params);
  tc.seed = 2;
  const TrainResult d = train(c.config(6, 4, 8), tc, c.instances);
  EXPECT_NE(a.epoch_losses, d.epoch_losses);
}

TEST(Trainer, OverfitsTinyCorpus) {
  const testing::ToyCorpus c = testing::toy_corpus(4, 9);
  TrainConfig tc;
  tc.epochs = 60;
  tc.learning_rate = 0.02;
  const TrainResult r = train(c.config(12, 4, 24), tc, c.instances);
  EXPECT_LT(r.epoch_losses.back(), 0.25 * r.epoch_losses.front());
  EXPECT_GE(teacher_forced_accuracy(r.params, c.instances), 0.9);
}

TEST(Trainer, HooksFireOnSchedule) {
  const testing::ToyCorpus& c = corpus8();
  TrainConfig tc;
  tc.epochs = 5;
  tc.checkpoint_every = 2;
  std::vector<std::size_t> saved, seen;
  TrainHooks hooks;
  hooks.on_checkpoint = [&](std::size_t e, const model::ModelParams&) { saved.push_back(e); };
  hooks.on_epoch = [&](std::size_t e, double) { seen.push_back(e); };
  train(c.config(4, 2, 4), tc, c.instances, hooks);
  EXPECT_EQ(saved, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(seen, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(Trainer, NonFiniteLossNamesInstance) {
  const testing::ToyCorpus& c = corpus8();
  model::ModelParams init = model::ModelParams::initialize(c.config(4, 2, 4), 2);
  init.b_out(0, 0) = std::numeric_limits<double>::quiet_NaN();
  TrainConfig tc;
  tc.epochs = 1;
  try {
    train(init, tc, c.instances);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("instance"), std::string::npos) << e.what();
  }
}

TEST(Trainer, EmptyCorpusIsDataError) {
  const testing::ToyCorpus& c = corpus8();
  EXPECT_THROW(train(c.config(4, 2, 4), TrainConfig{}, {}), DataError);
}

TEST(LossLog, WritesOneRowPerEpoch) {
  const auto path = std::filesystem::temp_directory_path() / "topnn_loss_log.csv";
  const std::vector<double> losses = {2.5, 1.25};
  write_loss_log(path, losses);
  EXPECT_EQ(io::read_file(path), "epoch,mean_loss\n1,2.5\n2,1.25\n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace topnn::pipeline
