#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "isg/action.hpp"
#include "isg/algebra.hpp"
#include "isg/groupoid.hpp"
#include "isg/relation.hpp"
#include "isg/semigroup.hpp"

namespace isg {

/// Semigroup document: {"labels": [...], "table": [[...], ...]}.
/// Errors: kParseError (with line or field), validation errors as thrown by
/// validate_inverse_semigroup.
InverseSemigroup parse_semigroup(std::string_view text, std::string_view source = "<input>");
InverseSemigroup load_semigroup(const std::string& path);
std::string semigroup_to_json(const InverseSemigroup& s);
void save_semigroup(const InverseSemigroup& s, const std::string& path);

/// Either a semigroup document or a graph document (graph semigroup).
InverseSemigroup load_subject(const std::string& path);
/// "builtin:<name>" or a path.
InverseSemigroup resolve_subject(const std::string& subject);

/// Array of blocks.
Relation parse_relation(std::string_view text, std::size_t n);
std::string relation_to_json(const Relation& r);

/// {"space": int, "maps": {"<element>": [int|null, ...]}}
Action parse_action(std::string_view text, std::shared_ptr<const InverseSemigroup> s);
std::string action_to_json(const Action& a);

/// {"vertices": int, "edges": [[src, dst], ...]}
DirectedGraph parse_graph(std::string_view text);
std::string graph_to_json(const DirectedGraph& g);

std::string groupoid_to_json(const FiniteGroupoid& g);
/// Units as boxes, non-unit arrows as labelled edges d -> r, arrows of
/// `highlight` drawn bold red.
std::string groupoid_to_dot(const FiniteGroupoid& g, const ElementSet& highlight);

/// Array of [re, im] indexed by arrow.
std::string function_to_json(const GroupoidFunction& f);
GroupoidFunction parse_function(std::string_view text, std::shared_ptr<const FiniteGroupoid> g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace isg
