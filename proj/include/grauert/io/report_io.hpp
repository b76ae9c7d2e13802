#pragma once

// JSON and CSV emission. Payloads carry a "schema" field and no timestamps;
// run metadata goes to a sidecar file.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "grauert/disk/foliation.hpp"
#include "grauert/disk/verify.hpp"
#include "grauert/flow/flow.hpp"
#include "grauert/geom/metric.hpp"
#include "grauert/tube/radius.hpp"

namespace grauert::io {

using Json = nlohmann::json;

inline constexpr int kSchema = 1;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);
Json to_json(const CVector& v);
CVector cvector_from_json(const Json& j);

Json to_json(const geom::SurfaceMetric& m);
Json to_json(const tube::TubeReport& r, const geom::SurfaceMetric& m);

Json to_json(const disk::HermitianModel& m);
disk::HermitianModel model_from_json(const Json& j);
Json to_json(const disk::FoliationChart& c);
disk::FoliationChart chart_from_json(const Json& j);

Json to_json(const disk::LeviReport& r);
Json to_json(const disk::TangencyReport& r);

// Writes to a temporary file next to path, then renames it over path.
void write_atomic(const std::filesystem::path& path, const std::string& content);
void write_json(const std::filesystem::path& path, const Json& j);
Json read_json(const std::filesystem::path& path);

// path + ".meta.json"
std::filesystem::path sidecar_path(const std::filesystem::path& path);
void write_sidecar(const std::filesystem::path& path, const Json& meta);

// theta, then Re/Im of each component of f(e^{i theta}).
std::string leaf_trace_csv(const disk::BoundaryDisk& f, std::size_t samples = 256);
// t, tau, then Re/Im of each coordinate.
std::string flow_trace_csv(const flow::FlowTrace& trace);

}  // namespace grauert::io
