#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "polyball/opspace.hpp"
#include "polyball/polytope.hpp"
#include "polyball/spaces.hpp"
#include "polyball/verify.hpp"

namespace polyball {

/// Fixed-width text table; the deterministic text counterpart of the JSON
/// report fragments.
class TextTable {
  public:
    void row(std::vector<std::string> cells);
    std::string str(int indent = 2) const;

  private:
    std::vector<std::vector<std::string>> rows_;
};

nlohmann::json star_report_json(const StarReport& r);
std::string star_report_text(const StarReport& r);

nlohmann::json facet_report_json(const BallPolytope& p, const FacetReport& f);
std::string facet_report_text(const BallPolytope& p, const FacetReport& f);

nlohmann::json vertex_list_json(const BallPolytope& p, const VertexList& v);
std::string vertex_list_text(const BallPolytope& p, const VertexList& v);

nlohmann::json face_descriptor_json(const FaceDescriptor& fd);

nlohmann::json embedding_json(const EmbeddingMap& m, const SpaceVerdict& v, std::optional<int> s);
std::string embedding_text(const EmbeddingMap& m, const SpaceVerdict& v, std::optional<int> s);

nlohmann::json opspace_json(const OpSpaceReport& r);
std::string opspace_text(const OpSpaceReport& r);

nlohmann::json checks_json(const std::vector<CheckResult>& checks);
std::string checks_text(const std::vector<CheckResult>& checks);

/// Serializes with sorted keys and a trailing newline; identical content
/// gives identical bytes.
std::string dump_report(const nlohmann::json& j);

}  // namespace polyball
