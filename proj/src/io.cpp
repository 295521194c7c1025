#include "gaussq/io.hpp"

#include "gaussq/errors.hpp"

namespace gaussq {

using nlohmann::json;

const char* base_name(LogBase base) { return base == LogBase::bits ? "bits" : "nats"; }

json state_to_json(const GaussianState& state) {
  json doc;
  doc["s"] = state.s();
  doc["hbar"] = state.ctx().hbar();
  doc["m"] = std::vector<double>(state.mean().data(), state.mean().data() + state.mean().size());
  json rows = json::array();
  for (Eigen::Index i = 0; i < state.alpha().rows(); ++i) {
    std::vector<double> row(state.alpha().cols());
    for (Eigen::Index j = 0; j < state.alpha().cols(); ++j) row[j] = state.alpha()(i, j);
    rows.push_back(row);
  }
  doc["alpha"] = rows;
  return doc;
}

GaussianState state_from_json(const json& doc) {
  try {
    const int s = doc.at("s").get<int>();
    const double hbar = doc.value("hbar", 1.0);
    const auto ctx = make_context(s, hbar);
    const int d = ctx.dim();

    Vector m = Vector::Zero(d);
    if (doc.contains("m")) {
      const auto mv = doc.at("m").get<std::vector<double>>();
      if (static_cast<int>(mv.size()) != d) throw InvalidArgument("state JSON: m must have length 2s");
      for (int i = 0; i < d; ++i) m[i] = mv[i];
    }
    const auto rows = doc.at("alpha").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != d) throw InvalidArgument("state JSON: alpha must be 2s x 2s");
    Matrix alpha(d, d);
    for (int i = 0; i < d; ++i) {
      if (static_cast<int>(rows[i].size()) != d)
        throw InvalidArgument("state JSON: alpha must be 2s x 2s");
      for (int j = 0; j < d; ++j) alpha(i, j) = rows[i][j];
    }
    return make_gaussian_state(ctx, m, alpha);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("state JSON: ") + e.what());
  }
}

json triangle_to_json(double n, double k, const InfoTriangle& t) {
  json doc;
  doc["N"] = n;
  doc["k"] = k;
  doc["entropies"] = {
      {"in", t.h_in.in(t.base).value()},
      {"out", t.h_out.in(t.base).value()},
      {"exch", t.h_exch.in(t.base).value()},
  };
  doc["quantities"] = {
      {"mutual", t.mutual_value()},
      {"loss", t.loss_value()},
      {"noise", t.noise_value()},
      {"coherent", t.coherent_value()},
  };
  doc["base"] = base_name(t.base);
  return doc;
}

}  // namespace gaussq
