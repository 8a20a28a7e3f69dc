// quotvol: exact volumes of Quot spaces on Riemann surfaces.
//
//   quotvol <command> [--file job.json] [--g G --r R --l 1,1 --d D --n N]
//           [--ttilde VALUE] [--suite NAME] [--format json|latex|plain]
//           [--threads K] [--timing]
//
// The job document is read from --file ("-" for standard input). Without
// --file, standard input is read only when it is not a terminal and none of
// --g, --r, --l, --d, --n is given. Flags override fields of the document.
//
// Exit codes: 0 success, 2 input error, 3 computation error.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quotvol/errors.hpp"
#include "quotvol/job.hpp"

namespace {

using nlohmann::json;

constexpr int kInputError = 2;
constexpr int kComputationError = 3;

json read_document(const std::string& file, bool problem_flags) {
  std::string text;
  if (file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw quotvol::cli::InputError("", "cannot open " + file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (!problem_flags && isatty(STDIN_FILENO) == 0) {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw quotvol::cli::InputError("", std::string("invalid JSON: ") + e.what());
  }
}

json parse_int_list(const std::string& text) {
  json out = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw quotvol::cli::InputError("/l", "cannot parse integer list '" + text + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact volumes of Quot spaces on compact Riemann surfaces"};
  app.require_subcommand(1);
  std::string file, l_list, ttilde, suite, format;
  long g = 0, r = 0, d = 0, n = 0;
  unsigned threads = 1;
  bool timing = false;

  for (const char* name : {"abelian-volume", "acyclic-volume", "quot-volume", "grothendieck-degree", "verify",
                           "sweep"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--file", file, "job document (JSON), - for standard input");
    sub->add_option("--g", g, "genus");
    sub->add_option("--r", r, "rank");
    sub->add_option("--l", l_list, "line bundle degrees, comma separated");
    sub->add_option("--d", d, "length of the quotient");
    sub->add_option("--n", n, "twist order for the Grothendieck embedding");
    sub->add_option("--ttilde", ttilde, "evaluate at this rational value of the stability parameter");
    sub->add_option("--suite", suite, "verification suite");
    sub->add_option("--format", format, "json, latex or plain")->check(CLI::IsMember({"json", "latex", "plain"}));
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", timing, "report wall time (output is no longer byte-stable)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  const CLI::App* sub = app.get_subcommands().front();

  try {
    bool problem_flags = false;
    for (const char* flag : {"--g", "--r", "--l", "--d", "--n"}) problem_flags = problem_flags || sub->count(flag) > 0;
    json spec = read_document(file, problem_flags);
    if (!spec.is_object()) throw quotvol::cli::InputError("", "job document must be a JSON object");
    spec["command"] = sub->get_name();
    if (!spec.contains("schema")) spec["schema"] = 1;
    if (sub->count("--g") > 0) spec["g"] = g;
    if (sub->count("--r") > 0) spec["r"] = r;
    if (sub->count("--d") > 0) spec["d"] = d;
    if (sub->count("--n") > 0) spec["n"] = n;
    if (sub->count("--l") > 0) spec["l"] = parse_int_list(l_list);
    if (sub->count("--suite") > 0) spec["suite"] = suite;
    if (sub->count("--ttilde") > 0) spec["t"] = {{"mode", "ttilde-value"}, {"value", ttilde}};
    if (sub->count("--format") > 0) spec["format"] = format;

    quotvol::cli::RunOptions options;
    options.threads = threads;
    options.timing = timing;
    const json result = quotvol::cli::run_job(spec, options);
    std::cout << quotvol::cli::render(result, spec.value("format", std::string("json")));
    return 0;
  } catch (const quotvol::cli::InputError& e) {
    std::cerr << "input error at '" << e.pointer() << "': " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const quotvol::ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kComputationError;
  }
}
