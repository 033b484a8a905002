#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schelling/assignment.hpp"
#include "schelling/instance.hpp"
#include "schelling/rational.hpp"
#include "schelling/reductions.hpp"

namespace schelling::formats {

// JSON file formats shared by the CLI and the test harness. Serialization is
// canonical: fixed key order, compact output, edges sorted. parse(serialize(x))
// is the identity and serialized bytes are stable across runs.

struct NamedInstance {
  Instance instance;
  std::vector<std::string> names;  // empty when the file carries none
};

NamedInstance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance,
                               const std::vector<std::string>& names = {});
NamedInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& instance,
                         const std::vector<std::string>& names = {});

struct AssignmentDoc {
  Assignment assignment;
  Rational sw;
};

AssignmentDoc parse_assignment(const std::string& text);
std::string serialize_assignment(const Assignment& assignment, const Rational& sw);
AssignmentDoc read_assignment_file(const std::string& path);
void write_assignment_file(const std::string& path, const Assignment& assignment,
                           const Rational& sw);

std::string serialize_claim(const ReductionClaim& claim);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace schelling::formats
