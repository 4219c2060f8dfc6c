// The on-disk description of a GKM complex (a JSON document, see
// docs/format.md and docs/complex.schema.json), its parser and serializer,
// and a DOT rendering of filtration results.  Rational entries travel as
// exact fraction strings; a missing reverse orientation is derived by
// negating the forward direction at equal weight, which satisfies the sign
// rule by construction, and every such derivation is reported.
#pragma once

#include <string>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/gkm.hpp"

namespace gkm {

// a structural defect in an input document, anchored to the field at fault
struct schema_error : input_error {
    schema_error(const std::string& origin, const std::string& location, const std::string& what)
        : input_error(origin + ": " + location + ": " + what), location(location) {}
    std::string location;
};

GKMComplex parse_document(const std::string& path, std::vector<std::string>* notes = nullptr);
GKMComplex parse_document_text(const std::string& text, const std::string& origin,
                               std::vector<std::string>* notes = nullptr);

std::string serialize_document(const GKMComplex& gc);
void write_document(const std::string& path, const GKMComplex& gc);

// DOT text for the total graph; with a filtration, vertices are labeled
// "position: name" and the downward edges are drawn bold
std::string render_dot(const GKMComplex& gc, const Filtration* filt = nullptr);

}  // namespace gkm
