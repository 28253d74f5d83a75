#include "coopstore/secure_precoder.hpp"

#include <sstream>

#include "coopstore/error.hpp"

namespace coopstore {

namespace {

std::vector<FieldElem> polynomial_basis(const Field& ext) {
  std::vector<FieldElem> pts;
  const Field& base = ext.base();
  for (unsigned j = 0; j < ext.degree(); ++j) {
    std::vector<FieldElem> coords(ext.degree(), base.zero());
    coords[j] = base.one();
    pts.push_back(ext.from_coordinates(coords));
  }
  return pts;
}

}  // namespace

SecureScheme scheme_create(const StableCode& code, unsigned l1, unsigned l2,
                           std::optional<std::size_t> secret_len_override) {
  const Field& base = code.field();
  if (base.kind() != FieldKind::BinaryExtension) {
    throw Error(Errc::FieldKindUnsupported, "secure mode needs a GF(2^m) symbol field, got " + base.describe());
  }
  const auto& p = code.params();
  const auto predicted = predicted_secrecy_capacity(p, l1, l2);
  if (!predicted) {
    throw Error(Errc::NotCoveredRegime, "no closed-form capacity for (l1,l2)=(" + std::to_string(l1) + "," +
                                            std::to_string(l2) + ") on " + p.to_string());
  }
  const std::size_t secret_len = secret_len_override.value_or(*predicted);
  if (secret_len == 0) throw Error(Errc::VacuousScheme, "secrecy capacity is 0; nothing can be stored securely");
  if (secret_len > p.B) throw Error(Errc::LengthMismatch, "secret length exceeds B");

  const Field ext = Field::extension(base, p.B);
  const auto pts = polynomial_basis(ext);
  Mat moore = moore_matrix(ext, pts, p.B, base.order());
  Mat moore_inv = invert(moore);
  return SecureScheme{code, ext, code.lift_to(ext), l1, l2, secret_len, p.B - secret_len, std::move(moore),
                      std::move(moore_inv)};
}

std::vector<FieldElem> precode(const SecureScheme& s, std::span<const FieldElem> secret,
                               std::span<const FieldElem> randomness) {
  if (secret.size() != s.secret_len || randomness.size() != s.random_len) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(s.secret_len) + " secret and " +
                                          std::to_string(s.random_len) + " random symbols");
  }
  std::vector<FieldElem> u(secret.begin(), secret.end());
  u.insert(u.end(), randomness.begin(), randomness.end());
  for (auto e : u) {
    if (!s.ext.contains(e)) throw Error(Errc::DimensionMismatch, "symbol outside " + s.ext.describe());
  }
  return (Mat::row_vector(s.ext, u) * s.moore).entries();
}

std::vector<FieldElem> unprecode(const SecureScheme& s, std::span<const FieldElem> message) {
  if (message.size() != s.moore.rows()) throw Error(Errc::LengthMismatch, "message must have length B");
  return (Mat::row_vector(s.ext, message) * s.moore_inv).entries();
}

std::vector<ShardVector> secure_encode(const SecureScheme& s, std::span<const FieldElem> secret,
                                       std::span<const FieldElem> randomness) {
  const auto c = precode(s, secret, randomness);
  return s.ext_code.encode(s.ext_code.data_from_vec(c));
}

std::vector<FieldElem> secure_decode(const SecureScheme& s, std::span<const ShardVector> shards) {
  const Mat m = s.ext_code.reconstruct(shards);
  auto u = unprecode(s, s.ext_code.vec_from_data(m));
  u.resize(s.secret_len);
  return u;
}

SecrecyCheck verify_secrecy(const SecureScheme& s, const EveModel& eve) {
  const StableRepairModel model(s.base_code);
  // Same span as the raw observations, far fewer rows.
  const Mat leak = row_echelon(leakage_observations(model, eve).rows());
  const Field& base = s.base_code.field();
  const Field& ext = s.ext;
  const std::size_t B = s.moore.rows();
  const std::size_t m = ext.degree();
  const std::size_t vars = B * m;  // variable (i, b): coordinate b of u_i

  // Each leaked symbol Σ_j a_j c_j = Σ_i u_i w_i expands to m base-field rows.
  std::vector<FieldElem> xpow(m);
  {
    std::vector<FieldElem> coords(m, base.zero());
    for (std::size_t b = 0; b < m; ++b) {
      coords.assign(m, base.zero());
      coords[b] = base.one();
      xpow[b] = ext.from_coordinates(coords);
    }
  }
  Mat E(base, 0, vars);
  for (std::size_t r = 0; r < leak.rows(); ++r) {
    const auto a = leak.row(r);
    std::vector<FieldElem> w(B, ext.zero());
    for (std::size_t i = 0; i < B; ++i) {
      for (std::size_t j = 0; j < B; ++j) w[i] = ext.add(w[i], ext.mul(ext.embed(a[j]), s.moore.at(i, j)));
    }
    std::vector<std::vector<FieldElem>> rows(m, std::vector<FieldElem>(vars, base.zero()));
    for (std::size_t i = 0; i < B; ++i) {
      for (std::size_t b = 0; b < m; ++b) {
        const auto coords = ext.coordinates(ext.mul(xpow[b], w[i]));
        for (std::size_t c = 0; c < m; ++c) rows[c][i * m + b] = coords[c];
      }
    }
    for (const auto& row : rows) E.append_row(row);
  }

  Mat S(base, 0, vars);
  Mat R(base, 0, vars);
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<FieldElem> row(vars, base.zero());
    row[v] = base.one();
    (v < s.secret_len * m ? S : R).append_row(row);
  }

  SecrecyCheck out;
  out.eve = eve;
  out.leak_rank = rank(E);
  out.random_rank = rank(R);
  out.leak_within_randomness = out.leak_rank <= out.random_rank;
  const Mat se = vstack(S, E);
  const std::size_t rank_se = rank(se);
  out.random_residual = rank(vstack(R, se)) - rank_se;
  out.mutual_information = rank(S) + out.leak_rank - rank_se;
  return out;
}

std::string SecrecyCheck::describe() const {
  std::ostringstream os;
  os << eve.to_string() << ": H(e)=" << leak_rank << " H(r)=" << random_rank << " H(r|s,e)=" << random_residual
     << " I(s;e)=" << mutual_information << (pass() ? " PASS" : " LEAK");
  return os.str();
}

}  // namespace coopstore
