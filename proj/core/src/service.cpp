// SPDX-License-Identifier: Apache-2.0

#include "puspec/service.hpp"

#include <charconv>

#include "puspec/basis_design.hpp"
#include "puspec/effects.hpp"

namespace puspec::service {

namespace {

double query_double(const Query& q, const std::string& key, double fallback) {
  const auto it = q.find(key);
  if (it == q.end()) return fallback;
  double v = 0.0;
  const auto& s = it->second;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    fail(ErrorCode::invalid_argument, "query parameter '" + key + "' is not a number");
  return v;
}

int query_int(const Query& q, const std::string& key, int fallback) {
  const auto it = q.find(key);
  if (it == q.end()) return fallback;
  int v = 0;
  const auto& s = it->second;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    fail(ErrorCode::invalid_argument, "query parameter '" + key + "' is not an integer");
  return v;
}

template <class T>
T field(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::invalid_argument, std::string("field '") + key + "' has the wrong type");
  }
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::invalid_argument, std::string("missing field '") + key + "'");
  return field<T>(j, key, T{});
}

PUBasis basis_of(const Json& request) {
  PUBasis basis(basis_spec_from_json(field<Json>(request, "basis", Json::object())));
  const std::string ill = field<std::string>(request, "illuminant", "E");
  if (ill != "E") basis = compute_basis_colors(std::move(basis), illuminant_by_name(ill));
  return basis;
}

ColorTarget target_of(const Json& request) {
  const Json t = required<Json>(request, "target");
  const auto c = required<std::vector<double>>(t, "c");
  if (c.size() != 2) fail(ErrorCode::invalid_argument, "target.c needs two values");
  return {{c[0], c[1]}, required<double>(t, "Y")};
}

TrianglePolicy policy_of(const Json& request) {
  const std::string p = field<std::string>(request, "policy", "first");
  if (p == "first") return TrianglePolicy::first;
  if (p == "random") return TrianglePolicy::random_per_sample;
  if (p == "fixed") return TrianglePolicy::fixed_index;
  fail(ErrorCode::invalid_argument, "unknown triangle policy '" + p + "'");
}

Json spectrum_of(const PUBasis& basis, const std::vector<double>& w) {
  return spectrum_to_json(basis.reconstruct(w), kSpectrumStride);
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::out_of_gamut:
    case ErrorCode::boundary_singular:
    case ErrorCode::infeasible:
    case ErrorCode::constraint_infeasible:
    case ErrorCode::undefined_chromaticity:
      return 422;
    case ErrorCode::io:
      return 500;
    default:
      return 400;
  }
}

Response error_response(ErrorCode code, const std::string& message) {
  return {http_status(code), {{"code", std::string(to_string(code))}, {"message", message}}};
}

Response get_basis(const Query& query) {
  BasisSpec spec;
  spec.count = query_int(query, "K", spec.count);
  spec.warp.strength = query_double(query, "s", spec.warp.strength);
  spec.warp.position = query_double(query, "p", spec.warp.position);
  spec.boundary_offset_nm = query_double(query, "offset", spec.boundary_offset_nm);
  PUBasis basis(spec);
  const auto it = query.find("illuminant");
  if (it != query.end() && it->second != "E")
    basis = compute_basis_colors(std::move(basis), illuminant_by_name(it->second));

  Json body = basis_to_json(basis);
  body["gamut"] = polygon_to_json(basis_gamut(basis));
  body["srgb"] = polygon_to_json(rgb_gamut(RgbSpace::srgb));
  body["wide_gamut"] = polygon_to_json(rgb_gamut(RgbSpace::adobe_wide_gamut));
  body["locus"] = polygon_to_json(spectral_locus(5));
  Json functions = Json::array();
  for (int k = 0; k < basis.size(); ++k) {
    Json v = Json::array();
    const auto g = basis.grid_values(k);
    for (std::size_t i = 0; i < g.size(); i += kSpectrumStride) v.push_back(g[i]);
    functions.push_back(v);
  }
  body["functions_5nm"] = functions;
  return {200, body};
}

Response post_sample(const Json& request) {
  const PUBasis basis = basis_of(request);
  const ColorTarget target = target_of(request);
  const auto count = field<std::size_t>(request, "count", 16);
  if (count > kMaxSamplesPerRequest)
    fail(ErrorCode::invalid_argument, "count exceeds " + std::to_string(kMaxSamplesPerRequest));
  SamplingOptions options;
  options.policy = policy_of(request);
  options.fixed_index = field<int>(request, "triangle_index", 0);
  const auto seed = field<std::uint64_t>(request, "seed", 0);

  const auto samples = sample_class(basis, target, count, seed, options);
  Json body = samples_to_json(basis, target, samples);
  if (field<bool>(request, "spectra", true)) {
    for (std::size_t i = 0; i < samples.size(); ++i)
      body["samples"][i]["spectrum"] = spectrum_of(basis, samples[i].w);
  }
  const FeasibilityReport f = feasibility_check(basis, target);
  body["feasibility"] = {{"feasible", f.feasible},
                         {"conservative", f.conservative},
                         {"max_luminance", f.max_luminance},
                         {"scaled_luminance", f.scaled_luminance},
                         {"w_max_luminance", f.max_luminance_weights}};
  return {200, body};
}

Response post_trajectory(const Json& request) {
  const PUBasis basis = basis_of(request);
  const auto w = required<std::vector<double>>(request, "w");
  const auto depths = field<std::vector<double>>(request, "depths", default_depth_grid());
  const DepthTrajectory t =
      depth_trajectory(basis.reconstruct(w), depths, illuminant_by_name(basis.illuminant_tag()));
  return {200, {{"points", trajectory_to_json(t)}}};
}

Response post_representatives(const Json& request) {
  const PUBasis basis = basis_of(request);
  const RepresentativeSet set =
      representative_set(basis, target_of(request), field<double>(request, "d_ref", kDefaultReferenceDepth));
  Json body = representatives_to_json(set);
  for (std::size_t i = 0; i < set.entries.size(); ++i)
    body["entries"][i]["spectrum"] = spectrum_of(basis, set.entries[i].w);
  return {200, body};
}

Response post_pick_hue(const Json& request) {
  const PUBasis basis = basis_of(request);
  const RepresentativeSet set =
      representative_set(basis, target_of(request), field<double>(request, "d_ref", kDefaultReferenceDepth));
  const std::vector<double> w = pick_by_hue(set, required<double>(request, "hue_rad"));
  const Illuminant& ill = illuminant_by_name(basis.illuminant_tag());
  const ColorXYZ at_one = integrate_to_xyz(basis.reconstruct(w), ill);
  const ColorXYZ at_ref = integrate_to_xyz(transmittance_at_depth(basis.reconstruct(w), set.d_ref), ill);
  return {200,
          {{"w", w},
           {"xy_d1", chromaticity_to_json(xyz_to_chromaticity(at_one))},
           {"Y_d1", at_one.Y},
           {"xy_d_ref", chromaticity_to_json(xyz_to_chromaticity(at_ref))},
           {"spectrum", spectrum_of(basis, w)}}};
}

Response post_palette(const Json& request) {
  const PUBasis basis(basis_spec_from_json(field<Json>(request, "basis", Json::object())));
  const Illuminant& i1 = illuminant_by_name(field<std::string>(request, "i1", "D65"));
  const Illuminant& i2 = illuminant_by_name(field<std::string>(request, "i2", "F2"));
  ColorTarget target;
  if (request.contains("target")) {
    target = target_of(request);
  } else {
    target.c = xyz_to_chromaticity(integrate_to_xyz(SpectralCurve::constant(1.0), i1));
    target.luminance = 0.8;
  }
  PaletteOptions options;
  options.count = field<std::size_t>(request, "count", 32);
  if (options.count > 4096) fail(ErrorCode::invalid_argument, "palette count exceeds 4096");
  options.seed = field<std::uint64_t>(request, "seed", 0);
  const auto palette = metameric_palette(basis, i1, i2, target, options);
  return {200, palette_to_json(palette, i1.name, i2.name, target)};
}

Response dispatch(const std::string& method, const std::string& path, const Query& query,
                  const std::string& body) {
  try {
    if (method == "GET" && path == "/basis") return get_basis(query);
    if (method != "POST") {
      Response r = error_response(ErrorCode::invalid_argument, "unsupported route " + method + " " + path);
      r.status = 404;
      return r;
    }
    Json request;
    try {
      request = body.empty() ? Json::object() : Json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      return error_response(ErrorCode::invalid_argument, std::string("malformed JSON: ") + e.what());
    }
    if (!request.is_object()) return error_response(ErrorCode::invalid_argument, "request body must be an object");
    if (path == "/sample") return post_sample(request);
    if (path == "/trajectory") return post_trajectory(request);
    if (path == "/representatives") return post_representatives(request);
    if (path == "/pick_hue") return post_pick_hue(request);
    if (path == "/palette") return post_palette(request);
    Response r = error_response(ErrorCode::invalid_argument, "unknown route " + path);
    r.status = 404;
    return r;
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_response(ErrorCode::invalid_argument, e.what());
  }
}

}  // namespace puspec::service
