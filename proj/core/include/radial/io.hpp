#pragma once

#include <string>
#include <string_view>

#include "radial/graph.hpp"
#include "radial/oracle.hpp"
#include "radial/pipeline.hpp"

namespace radial {

/// Verdict document. Always carries the flags, provenance and augmentation
/// record; the system and certificate are left out when `terse` is set.
std::string verdict_json(const Verdict& v, bool terse = false);

/// Offline re-check of a non-terse verdict document: rebuilds the system from
/// the document and verifies the certificate against it.
/// Throws Error(MalformedInput) if the document lacks the needed fields.
bool check_verdict_json(std::string_view text);

/// `{"angles":{id:[num,den]},"windings":{edge:int}}`, edges keyed by their
/// index in the graph's edge list.
std::string witness_json(const GeometricEmbedding& w);

/// Inverse of witness_json for the given graph. The slot count becomes the
/// least common denominator of the angles.
GeometricEmbedding parse_witness(std::string_view text, const LeveledGraph& g);

}  // namespace radial
