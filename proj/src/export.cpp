#include "fecc/export.hpp"

#include <cstdio>
#include <sstream>
#include <variant>

#include "fecc/errors.hpp"

namespace fecc {

namespace {

bool emits(const std::string& emit, const char* section) { return emit == "all" || emit == section; }

void check_emit(const std::string& emit) {
  if (emit != "all" && emit != "functionals" && emit != "basis" && emit != "matrix")
    throw InvalidParameter("unknown section '" + emit + "'");
}

Json form_to_json(const Element1D& e, FormDegree k, const std::string& emit) {
  Json form;
  form["degree"] = to_int(k);
  form["dimension"] = e.dimension(k);
  const std::string name = k == FormDegree::zero ? "u" : "v";
  if (emits(emit, "functionals")) {
    Json list = Json::array();
    const auto& fs = e.functionals(k);
    for (std::size_t i = 0; i < fs.size(); ++i) list.push_back(functional_to_json(fs[i], static_cast<int>(i) + 1, name));
    form["functionals"] = list;
  }
  if (emits(emit, "basis")) {
    Json list = Json::array();
    for (const auto& p : e.basis(k)) list.push_back(polynomial_to_json(p));
    form["basis"] = list;
  }
  if (emits(emit, "matrix")) {
    form["node_matrix"] = matrix_to_json(e.node_matrix(k));
    form["alpha"] = matrix_to_json(e.alpha(k));
  }
  return form;
}

void matrix_text(std::ostringstream& os, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "  ") << m(i, j).to_string();
    os << '\n';
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

Json functional_to_json(const NodeFunctional& f, int index, const std::string& name) {
  Json out;
  out["index"] = index;
  out["kind"] = tag(f);
  out["descriptor"] = describe(f, name);
  if (const auto* e = std::get_if<EndpointDerivative>(&f.kind)) {
    out["point"] = e->point;
    out["order"] = e->order;
    out["of_derivative"] = e->of_derivative;
  } else if (const auto* mo = std::get_if<Moment>(&f.kind)) {
    out["legendre_index"] = mo->legendre_index;
    out["of_derivative"] = mo->of_derivative;
  }
  return out;
}

Json element_to_json(const Element1D& e, const std::string& emit) {
  check_emit(emit);
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["functional_scheme"] = kFunctionalScheme;
  out["m"] = e.m;
  out["n"] = e.n;
  out["forms"] = Json::array({form_to_json(e, FormDegree::zero, emit), form_to_json(e, FormDegree::one, emit)});
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json out;
  out["property"] = r.property;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  out["parameters"] = params;
  out["pass"] = r.pass;
  out["failures"] = r.failures;
  Json witness = Json::array();
  for (const auto& w : r.witness) witness.push_back(Json{{"kind", w.kind}, {"indices", w.indices}, {"value", w.value}});
  out["witness"] = witness;
  return out;
}

Json tensor_table_to_json(int N, const Element1D& e, bool with_matrices) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["functional_scheme"] = kFunctionalScheme;
  out["N"] = N;
  out["m"] = e.m;
  out["n"] = e.n;
  Json forms = Json::array();
  for (int nu = 0; nu <= N; ++nu) {
    Json form;
    form["nu"] = nu;
    form["dimension"] = space_dimension(N, nu, e);
    const auto functionals = tensor_functionals(N, nu, e);
    std::size_t next = 0;
    Json blocks = Json::array();
    for (const auto& chi : enumerate_chi(N, nu)) {
      Json block;
      block["chi"] = chi.to_string();
      const auto shape = block_shape(chi, e);
      block["shape"] = shape;
      std::size_t size = 1;
      for (auto s : shape) size *= s;
      Json list = Json::array();
      for (std::size_t i = 0; i < size; ++i, ++next) {
        const auto& f = functionals[next];
        list.push_back(
            Json{{"indices", f.indices}, {"descriptor", describe(f)}, {"smooth_descriptor", describe_smooth(f)}});
      }
      block["functionals"] = list;
      if (with_matrices) block["node_matrix"] = matrix_to_json(kronecker_node_matrix(chi, e));
      blocks.push_back(block);
    }
    form["blocks"] = blocks;
    forms.push_back(form);
  }
  out["forms"] = forms;
  return out;
}

std::string element_to_text(const Element1D& e, const std::string& emit) {
  check_emit(emit);
  std::ostringstream os;
  os << "element m=" << e.m << " n=" << e.n << " (" << kFunctionalScheme << ")\n";
  for (FormDegree k : {FormDegree::zero, FormDegree::one}) {
    const int d = to_int(k);
    const std::string name = d == 0 ? "u" : "v";
    if (emits(emit, "functionals")) {
      os << d << "-form functionals:\n";
      const auto& fs = e.functionals(k);
      for (std::size_t i = 0; i < fs.size(); ++i) os << "  N" << d << "_" << i + 1 << " = " << describe(fs[i], name) << '\n';
    }
    if (emits(emit, "basis")) {
      os << d << "-form basis:\n";
      const auto& bs = e.basis(k);
      for (std::size_t j = 0; j < bs.size(); ++j) os << "  phi" << d << "_" << j + 1 << " = " << to_string(bs[j]) << '\n';
    }
    if (emits(emit, "matrix")) {
      os << "M" << d << ":\n";
      matrix_text(os, e.node_matrix(k));
    }
  }
  return os.str();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.property;
  for (const auto& [k, v] : r.parameters) os << ' ' << k << '=' << v;
  os << '\n';
  for (const auto& w : r.witness) {
    os << "  " << w.kind << " [";
    for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
    os << "] " << w.value << '\n';
  }
  if (r.failures > r.witness.size()) os << "  ... " << r.failures - r.witness.size() << " more\n";
  return os.str();
}

std::string basis_samples_csv(const Element1D& e, int samples) {
  if (samples < 2) throw InvalidParameter("need at least two samples");
  std::vector<RealPolynomial> b0, b1;
  for (const auto& p : e.basis0) b0.emplace_back(p);
  for (const auto& p : e.basis1) b1.emplace_back(p);
  std::ostringstream os;
  os << 'x';
  for (std::size_t j = 0; j < b0.size(); ++j) os << ",phi0_" << j + 1;
  for (std::size_t j = 0; j < b1.size(); ++j) os << ",phi1_" << j + 1;
  os << '\n';
  for (int s = 0; s < samples; ++s) {
    const double x = static_cast<double>(s) / (samples - 1);
    os << format_real(x);
    for (const auto& p : b0) os << ',' << format_real(p(x));
    for (const auto& p : b1) os << ',' << format_real(p(x));
    os << '\n';
  }
  return os.str();
}

std::string tensor_basis_samples_csv(const Element1D& e, const CharacteristicVector& chi,
                                     std::span<const std::size_t> j, int samples) {
  if (chi.size() != 2) throw InvalidParameter("grid sampler is two-dimensional");
  if (samples < 2) throw InvalidParameter("need at least two samples");
  const RankOneForm b = basis_element(chi, j, e);
  const RealPolynomial fx(b.factors[0].second);
  const RealPolynomial fy(b.factors[1].second);
  std::ostringstream os;
  os << "x,y,value\n";
  for (int sx = 0; sx < samples; ++sx)
    for (int sy = 0; sy < samples; ++sy) {
      const double x = static_cast<double>(sx) / (samples - 1);
      const double y = static_cast<double>(sy) / (samples - 1);
      os << format_real(x) << ',' << format_real(y) << ',' << format_real(fx(x) * fy(y)) << '\n';
    }
  return os.str();
}

std::string interpolation_samples_csv(const Element1D& e, const SmoothFunction1D& u, int quadrature_order,
                                      int samples) {
  if (samples < 2) throw InvalidParameter("need at least two samples");
  // Polynomial inputs take the exact path so that projection shows up bit for bit.
  const auto& exact = u.exact_polynomial();
  const RealPolynomial i0 = exact ? RealPolynomial(interpolate(e, FormDegree::zero, *exact))
                                  : interpolate_smooth(e, FormDegree::zero, u, quadrature_order);
  const RealPolynomial di0 = i0.derivative();
  const RealPolynomial i1 = exact ? RealPolynomial(interpolate(e, FormDegree::one, differentiate(*exact)))
                                  : interpolate_smooth(e, FormDegree::one, u.differentiated(), quadrature_order);
  std::ostringstream os;
  os << "x,u,I0u,dI0u,I1du,residual\n";
  for (int s = 0; s < samples; ++s) {
    const double x = static_cast<double>(s) / (samples - 1);
    os << format_real(x) << ',' << format_real(u.value(x)) << ',' << format_real(i0(x)) << ','
       << format_real(di0(x)) << ',' << format_real(i1(x)) << ',' << format_real(di0(x) - i1(x)) << '\n';
  }
  return os.str();
}

std::string two_cell_samples_csv(const Element1D& e, const SmoothFunction1D& u, int quadrature_order, int samples) {
  if (samples < 2) throw InvalidParameter("need at least two samples");
  const TwoCellInterpolant interp = two_cell_interpolant(e, PiecewiseSmooth1D{u, u}, quadrature_order);
  std::ostringstream os;
  os << "x,u";
  for (int s = 0; s <= e.m; ++s) os << (s == 0 ? ",Iu" : ",d" + std::to_string(s) + "Iu");
  os << '\n';
  for (int k = 0; k < samples; ++k) {
    const double x = 2.0 * static_cast<double>(k) / (samples - 1);
    os << format_real(x) << ',' << format_real(u.value(x));
    for (int s = 0; s <= e.m; ++s) os << ',' << format_real(interp.derivative(s, x));
    os << '\n';
  }
  return os.str();
}

}  // namespace fecc
