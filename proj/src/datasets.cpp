#include "qmc/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "qmc/errors.hpp"

namespace qmc {

namespace {

constexpr double kPi = std::numbers::pi;

// Noise for the spiral arms is specified in arm-local units: 1.0 equals the
// radial gap (1/3) between the two interleaved arms.
constexpr double kSpiralArmGap = 1.0 / 3.0;

struct TwoClassBuilder {
  LabeledDataset d;
  explicit TwoClassBuilder(std::size_t n) {
    d.n_cols = 2;
    d.class_names = {"0", "1"};
    d.features.reserve(2 * n);
    d.labels.reserve(n);
  }
  void add(double x, double y, int label) {
    d.features.push_back(x);
    d.features.push_back(y);
    d.labels.push_back(label);
    ++d.n_rows;
  }
};

}  // namespace

LabeledDataset generate(const std::string& name, std::size_t n, double noise,
                        std::uint64_t seed) {
  if (n < 2) throw SpecError("generate: need n >= 2");
  if (name != "moons" && name != "circles" && name != "spirals")
    throw UnknownDatasetError("unknown dataset '" + name + "'");

  const std::size_t n0 = (n + 1) / 2;  // class 0 takes the odd extra
  const std::size_t n1 = n - n0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  TwoClassBuilder b(n);

  auto param = [](std::size_t i, std::size_t count, double lo, double hi) {
    return count > 1 ? lo + (hi - lo) * double(i) / double(count - 1) : lo;
  };

  if (name == "moons") {
    // upper half-circle, and its point reflection dropped by 0.5 in y
    for (std::size_t i = 0; i < n0; ++i) {
      const double t = param(i, n0, 0.0, kPi);
      b.add(std::cos(t) + noise * gauss(rng), std::sin(t) + noise * gauss(rng), 0);
    }
    for (std::size_t i = 0; i < n1; ++i) {
      const double t = param(i, n1, 0.0, kPi);
      b.add(1.0 - std::cos(t) + noise * gauss(rng),
            0.5 - std::sin(t) + noise * gauss(rng), 1);
    }
  } else if (name == "circles") {
    for (std::size_t i = 0; i < n0; ++i) {
      const double t = param(i, n0, 0.0, 2.0 * kPi * (1.0 - 1.0 / double(n0)));
      b.add(std::cos(t) + noise * gauss(rng), std::sin(t) + noise * gauss(rng), 0);
    }
    for (std::size_t i = 0; i < n1; ++i) {
      const double t = param(i, n1, 0.0, 2.0 * kPi * (1.0 - 1.0 / double(n1)));
      b.add(0.5 * std::cos(t) + noise * gauss(rng),
            0.5 * std::sin(t) + noise * gauss(rng), 1);
    }
  } else {  // spirals
    const double sigma = noise * kSpiralArmGap;
    for (std::size_t i = 0; i < n0 + n1; ++i) {
      const int label = i < n0 ? 0 : 1;
      const std::size_t count = label == 0 ? n0 : n1;
      const std::size_t idx = label == 0 ? i : i - n0;
      const double theta = param(idx, count, 0.0, 3.0 * kPi);
      const double r = theta / (3.0 * kPi);
      const double phase = label == 0 ? 0.0 : kPi;  // opposite arm
      b.add(r * std::cos(theta + phase) + sigma * gauss(rng),
            r * std::sin(theta + phase) + sigma * gauss(rng), label);
    }
  }

  b.d.seed = seed;
  {
    std::ostringstream src;
    src << name << " n=" << n << " noise=" << noise << " seed=" << seed;
    b.d.source = src.str();
  }
  return b.d;
}

std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& data,
                                                double test_fraction,
                                                std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw InvalidSplitError("split: test_fraction must be in (0,1)");
  const std::size_t n_classes = data.class_names.size();
  std::vector<std::vector<std::size_t>> by_class(n_classes);
  for (std::size_t i = 0; i < data.n_rows; ++i)
    by_class.at(static_cast<std::size_t>(data.labels[i])).push_back(i);

  std::mt19937_64 rng(seed);
  std::vector<char> in_test(data.n_rows, 0);
  std::size_t test_total = 0;
  for (auto& rows : by_class) {
    std::shuffle(rows.begin(), rows.end(), rng);
    const std::size_t take =
        static_cast<std::size_t>(std::llround(test_fraction * double(rows.size())));
    for (std::size_t i = 0; i < take && i < rows.size(); ++i) in_test[rows[i]] = 1;
    test_total += std::min(take, rows.size());
  }
  if (test_total == 0 || test_total == data.n_rows)
    throw InvalidSplitError("split: a side would be empty");

  auto take_part = [&](bool test) {
    LabeledDataset part;
    part.n_cols = data.n_cols;
    part.class_names = data.class_names;
    part.seed = seed;
    part.source = data.source + (test ? " | split:test" : " | split:train");
    for (std::size_t i = 0; i < data.n_rows; ++i) {
      if (static_cast<bool>(in_test[i]) != test) continue;
      auto r = data.row(i);
      part.features.insert(part.features.end(), r.begin(), r.end());
      part.labels.push_back(data.labels[i]);
      ++part.n_rows;
    }
    return part;
  };
  return {take_part(false), take_part(true)};
}

double accuracy(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size() || truth.empty())
    throw DimensionError("accuracy: label vectors must have equal nonzero length");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i)
    if (predicted[i] == truth[i]) ++hits;
  return double(hits) / double(truth.size());
}

void write_csv(const LabeledDataset& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (std::size_t c = 0; c < data.n_cols; ++c) out << "f" << (c + 1) << ",";
  out << "label\n";
  char buf[64];
  for (std::size_t i = 0; i < data.n_rows; ++i) {
    for (std::size_t c = 0; c < data.n_cols; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", data.features[i * data.n_cols + c]);
      out << buf << ",";
    }
    out << data.class_names.at(static_cast<std::size_t>(data.labels[i])) << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

LabeledDataset read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw SchemaError(path + ": empty file, expected header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) header.push_back(field);
  }
  if (header.size() < 2 || header.back() != "label")
    throw SchemaError(path + ": header must end with a 'label' column");
  const std::size_t n_cols = header.size() - 1;

  LabeledDataset data;
  data.n_cols = n_cols;
  data.source = path;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.push_back("");
    if (fields.size() != n_cols + 1)
      throw ParseError(path + ": line " + std::to_string(line_no) + ": expected " +
                       std::to_string(n_cols + 1) + " fields, got " +
                       std::to_string(fields.size()));
    for (std::size_t c = 0; c < n_cols; ++c) {
      const std::string& s = fields[c];
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (s.empty() || end != s.c_str() + s.size())
        throw ParseError(path + ": line " + std::to_string(line_no) +
                         ": not a number: '" + s + "'");
      data.features.push_back(v);
    }
    const std::string& lab = fields[n_cols];
    auto it = std::find(data.class_names.begin(), data.class_names.end(), lab);
    if (it == data.class_names.end()) {
      data.class_names.push_back(lab);
      it = std::prev(data.class_names.end());
    }
    data.labels.push_back(int(it - data.class_names.begin()));
    ++data.n_rows;
  }
  return data;
}

}  // namespace qmc
