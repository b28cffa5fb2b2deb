#include "qmc/model_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "qmc/errors.hpp"

namespace qmc {

namespace {

using nlohmann::json;

constexpr char kMagic[4] = {'Q', 'M', 'C', '1'};
constexpr int kFormatVersion = 1;

json header_json(const TrainedModel& m) {
  json enc{{"kind", to_string(m.spec.kind)},
           {"num_features", m.spec.num_features}};
  switch (m.spec.kind) {
    case EncoderKind::softmax:
      enc["per_feature_dim"] = m.spec.per_feature_dim;
      enc["beta"] = m.spec.beta;
      break;
    case EncoderKind::onehot:
      enc["per_feature_dim"] = m.spec.per_feature_dim;
      break;
    case EncoderKind::squeezed:
      enc["per_feature_dim"] = m.spec.per_feature_dim;
      enc["r"] = m.spec.r;
      break;
    case EncoderKind::coherent:
      enc["per_feature_dim"] = m.spec.per_feature_dim;
      enc["gamma"] = m.spec.gamma;
      break;
    case EncoderKind::rff:
      enc["rff_dim"] = m.spec.rff_dim;
      enc["rff_seed"] = m.spec.rff_seed;
      enc["gamma"] = m.spec.gamma;
      break;
  }

  json scaler{{"target", to_string(m.scaler.target)}};
  if (m.scaler.target != ScaleTarget::none) {
    scaler["min"] = m.scaler.min;
    scaler["max"] = m.scaler.max;
  }

  json h{{"format_version", kFormatVersion},
         {"mode", to_string(m.mode)},
         {"encoder", enc},
         {"scaler", scaler},
         {"labels", m.labels},
         {"shape", {{"dim_x", m.shape.dim_x}, {"dim_y", m.shape.dim_y}}},
         {"n_train", m.n_train}};
  if (m.proj) {
    h["rff_projection"] = {{"dim_out", m.proj->dim_out},
                           {"dim_in", m.proj->dim_in},
                           {"frequencies", m.proj->frequencies},
                           {"offsets", m.proj->offsets},
                           {"gamma", m.proj->gamma},
                           {"seed", m.proj->seed}};
  }
  return h;
}

TrainedModel model_from_header(const json& h) {
  TrainedModel m;
  if (!h.contains("format_version") || h.at("format_version").get<int>() != kFormatVersion)
    throw SchemaError("model file: unsupported format_version");
  m.mode = train_mode_from_string(h.at("mode").get<std::string>());

  const json& enc = h.at("encoder");
  m.spec.kind = encoder_kind_from_string(enc.at("kind").get<std::string>());
  m.spec.num_features = enc.at("num_features").get<std::size_t>();
  if (enc.contains("per_feature_dim"))
    m.spec.per_feature_dim = enc.at("per_feature_dim").get<std::size_t>();
  if (enc.contains("beta")) m.spec.beta = enc.at("beta").get<double>();
  if (enc.contains("gamma")) m.spec.gamma = enc.at("gamma").get<double>();
  if (enc.contains("r")) m.spec.r = enc.at("r").get<double>();
  if (enc.contains("rff_dim")) m.spec.rff_dim = enc.at("rff_dim").get<std::size_t>();
  if (enc.contains("rff_seed")) m.spec.rff_seed = enc.at("rff_seed").get<std::uint64_t>();

  const json& sc = h.at("scaler");
  m.scaler.target = scale_target_from_string(sc.at("target").get<std::string>());
  if (m.scaler.target != ScaleTarget::none) {
    m.scaler.min = sc.at("min").get<std::vector<double>>();
    m.scaler.max = sc.at("max").get<std::vector<double>>();
  }

  m.labels = h.at("labels").get<std::vector<std::string>>();
  m.shape.dim_x = h.at("shape").at("dim_x").get<std::size_t>();
  m.shape.dim_y = h.at("shape").at("dim_y").get<std::size_t>();
  m.n_train = h.at("n_train").get<std::size_t>();

  if (h.contains("rff_projection")) {
    const json& rp = h.at("rff_projection");
    RffProjection p;
    p.dim_out = rp.at("dim_out").get<std::size_t>();
    p.dim_in = rp.at("dim_in").get<std::size_t>();
    p.frequencies = rp.at("frequencies").get<std::vector<double>>();
    p.offsets = rp.at("offsets").get<std::vector<double>>();
    p.gamma = rp.at("gamma").get<double>();
    p.seed = rp.at("seed").get<std::uint64_t>();
    if (p.frequencies.size() != p.dim_out * p.dim_in ||
        p.offsets.size() != p.dim_out)
      throw SchemaError("model file: rff projection arrays have wrong size");
    m.proj = std::move(p);
  }
  return m;
}

void check_structure(const TrainedModel& m) {
  const std::size_t d = m.shape.joint_dim();
  if (m.rho.dim != d || m.rho.a.size() != d * d)
    throw SchemaError("model file: rho dimensions disagree with shape");
  if (m.labels.size() != m.shape.dim_y)
    throw SchemaError("model file: label count disagrees with dim_y");
  double herm = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      herm = std::max(herm,
                      std::abs(m.rho.at(i, j) - std::conj(m.rho.at(j, i))));
  if (herm > kHermitianTol)
    throw SchemaError("model file: rho is not Hermitian");
  if (std::abs(m.rho.trace() - cplx{1.0, 0.0}) > kTraceTol)
    throw SchemaError("model file: rho trace differs from 1");
}

void write_le_doubles(std::ofstream& out, const double* p, std::size_t count) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(p),
              std::streamsize(count * sizeof(double)));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t bits;
      std::memcpy(&bits, &p[i], 8);
      char buf[8];
      for (int b = 0; b < 8; ++b) buf[b] = char((bits >> (8 * b)) & 0xff);
      out.write(buf, 8);
    }
  }
}

void read_le_doubles(std::ifstream& in, double* p, std::size_t count) {
  if constexpr (std::endian::native == std::endian::little) {
    in.read(reinterpret_cast<char*>(p), std::streamsize(count * sizeof(double)));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      char buf[8];
      in.read(buf, 8);
      std::uint64_t bits = 0;
      for (int b = 0; b < 8; ++b)
        bits |= std::uint64_t(static_cast<unsigned char>(buf[b])) << (8 * b);
      std::memcpy(&p[i], &bits, 8);
    }
  }
}

}  // namespace

void save_model(const TrainedModel& model, const std::string& path,
                bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  json h = header_json(model);
  const std::size_t d = model.rho.dim;

  if (binary) {
    const std::string header = h.dump();
    out.write(kMagic, 4);
    std::uint64_t len = header.size();
    char lenbuf[8];
    for (int b = 0; b < 8; ++b) lenbuf[b] = char((len >> (8 * b)) & 0xff);
    out.write(lenbuf, 8);
    out.write(header.data(), std::streamsize(header.size()));
    write_le_doubles(out, reinterpret_cast<const double*>(model.rho.a.data()),
                     2 * d * d);
  } else {
    json rho = json::array();
    for (std::size_t i = 0; i < d; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < d; ++j) {
        const cplx& z = model.rho.at(i, j);
        row.push_back(json::array({z.real(), z.imag()}));
      }
      rho.push_back(std::move(row));
    }
    h["rho"] = std::move(rho);
    out << h.dump(1) << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

TrainedModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  if (in.gcount() == 4 && std::memcmp(magic, kMagic, 4) == 0) {
    char lenbuf[8];
    in.read(lenbuf, 8);
    if (in.gcount() != 8) throw SchemaError(path + ": truncated header length");
    std::uint64_t len = 0;
    for (int b = 0; b < 8; ++b)
      len |= std::uint64_t(static_cast<unsigned char>(lenbuf[b])) << (8 * b);
    std::string header(len, '\0');
    in.read(header.data(), std::streamsize(len));
    if (std::uint64_t(in.gcount()) != len)
      throw SchemaError(path + ": truncated header");
    json h;
    try {
      h = json::parse(header);
    } catch (const json::exception& e) {
      throw SchemaError(path + ": bad header json: " + e.what());
    }
    TrainedModel m = model_from_header(h);
    const std::size_t d = m.shape.joint_dim();
    m.rho = DensityMatrix(d);
    read_le_doubles(in, reinterpret_cast<double*>(m.rho.a.data()), 2 * d * d);
    if (!in) throw SchemaError(path + ": truncated rho payload");
    check_structure(m);
    return m;
  }

  in.seekg(0);
  json h;
  try {
    h = json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(path + ": not a model file: " + e.what());
  }
  TrainedModel m = model_from_header(h);
  const std::size_t d = m.shape.joint_dim();
  if (!h.contains("rho")) throw SchemaError(path + ": missing rho");
  const json& rho = h.at("rho");
  if (rho.size() != d) throw SchemaError(path + ": rho has wrong row count");
  m.rho = DensityMatrix(d);
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = rho.at(i);
    if (row.size() != d) throw SchemaError(path + ": rho row has wrong length");
    for (std::size_t j = 0; j < d; ++j) {
      const json& z = row.at(j);
      m.rho.at(i, j) = cplx{z.at(0).get<double>(), z.at(1).get<double>()};
    }
  }
  check_structure(m);
  return m;
}

}  // namespace qmc
