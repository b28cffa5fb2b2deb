#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qmc {

/// Rows of real-valued feature vectors with categorical labels.
struct LabeledDataset {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<double> features;  // n_rows x n_cols, row-major
  std::vector<int> labels;       // index into class_names, per row
  std::vector<std::string> class_names;
  // provenance
  std::uint64_t seed = 0;
  std::string source;

  std::span<const double> row(std::size_t i) const {
    return {features.data() + i * n_cols, n_cols};
  }
};

/// Two-class 2-D toy generators: "moons", "circles", "spirals".
/// Deterministic per (name, n, noise, seed). Throws UnknownDatasetError.
LabeledDataset generate(const std::string& name, std::size_t n, double noise,
                        std::uint64_t seed);

/// Stratified train/test split, deterministic per seed.
/// Throws InvalidSplitError when either side would be empty.
std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& data,
                                                double test_fraction,
                                                std::uint64_t seed);

/// Fraction of exact label matches. Throws DimensionError on length mismatch.
double accuracy(std::span<const int> predicted, std::span<const int> truth);

/// CSV with header "f1,...,fn,label"; values printed with 17 significant
/// digits so a write/read round trip is value-exact.
void write_csv(const LabeledDataset& data, const std::string& path);
LabeledDataset read_csv(const std::string& path);

}  // namespace qmc
