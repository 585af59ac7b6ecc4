// Synthetic data and filesystem helpers shared by the test binaries.
#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "femafs/dataset.hpp"

namespace synth {

// Uniform in [0,1) from the generator's raw 64-bit output; identical on every
// platform, unlike the distribution templates.
double unit_uniform(std::mt19937_64& rng);

// Standard normal via Box-Muller on unit_uniform draws.
double unit_normal(std::mt19937_64& rng);

femafs::LabeledDataset from_rows(const std::vector<std::vector<double>>& rows,
                                 const std::vector<int>& labels);

std::vector<std::vector<double>> rows_of(const femafs::LabeledDataset& data);

// m samples, n uniform features in [0,1), c classes assigned round-robin so
// every class gets at least floor(m/c) samples. Requires m >= 2*c.
femafs::LabeledDataset random_dataset(std::size_t m, std::size_t n, int c,
                                      std::uint64_t seed);

// Two balanced classes of 100 samples: 10 informative features drawn from
// class-shifted normals N(0.30, 0.25) / N(0.70, 0.25) clipped to [0,1], plus
// 10 uniform-noise features.
femafs::LabeledDataset informative_noise_dataset(std::uint64_t seed);

// Dataset serialized the way load_csv reads it (label column last).
std::string to_csv(const femafs::LabeledDataset& data, const std::string& label_column);

// Unique directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace synth
