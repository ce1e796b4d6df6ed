#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ltsconf/ltsconf.hpp"

namespace {

enum Exit { kOk = 0, kNotConfluent = 1, kInconclusive = 2, kInputError = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ltsconf::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ltsconf::RuleSystem load_rules(const std::string& path) {
  try {
    return ltsconf::parse_rules(read_file(path));
  } catch (const ltsconf::Error& e) {
    throw ltsconf::Error(path + ": " + e.what());
  }
}

ltsconf::Lts load_aut(const std::string& path) {
  try {
    return ltsconf::parse_aut(read_file(path));
  } catch (const ltsconf::Error& e) {
    throw ltsconf::Error(path + ": " + e.what());
  }
}

unsigned default_max_steps() {
  const char* env = std::getenv("LTSCONF_MAX_STEPS");
  if (env == nullptr || *env == '\0') return ltsconf::kDefaultMaxSteps;
  char* end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value > 1000000) {
    throw ltsconf::Error("LTSCONF_MAX_STEPS must be a non-negative integer");
  }
  return static_cast<unsigned>(value);
}

int exit_for(ltsconf::Verdict v) {
  switch (v) {
    case ltsconf::Verdict::confluent: return kOk;
    case ltsconf::Verdict::not_confluent: return kNotConfluent;
    case ltsconf::Verdict::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out || !(out << text)) throw ltsconf::Error("cannot write " + out_file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Confluence checking for LTS transformation rules"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Report format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::string model_path, rules_path, out_file, pair_spec, mode_name = "eager";
  std::optional<unsigned> max_steps;

  auto* apply = app.add_subcommand("apply", "Derive the normal forms of a model");
  apply->add_option("model", model_path, "Model in .aut format")->required();
  apply->add_option("rules", rules_path, "Rule document")->required();
  apply->add_option("--max-steps", max_steps, "Bound on rule applications per branch");
  apply->add_option("--out", out_file, "Write the result to FILE instead of stdout");

  auto* detect = app.add_subcommand("detect", "List the critical pairs of a rule system");
  detect->add_option("rules", rules_path, "Rule document")->required();
  detect->add_option("--pair", pair_spec, "Only the pair of rules A,B");

  auto* resolve = app.add_subcommand("resolve", "Decide joinability of every critical pair");
  resolve->add_option("rules", rules_path, "Rule document")->required();
  resolve->add_option("--max-steps", max_steps, "Bound on rule applications per branch");

  auto* check = app.add_subcommand("check", "Check local confluence of a rule system");
  check->add_option("rules", rules_path, "Rule document")->required();
  check->add_option("--mode", mode_name, "eager or exhaustive")
      ->check(CLI::IsMember({"eager", "exhaustive"}));
  check->add_option("--max-steps", max_steps, "Bound on rule applications per branch");

  auto* oracle = app.add_subcommand("oracle-pairs", "");
  oracle->group("");
  oracle->add_option("rules", rules_path, "Rule document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    auto format = ltsconf::parse_report_format(format_name);
    unsigned steps = max_steps ? *max_steps : default_max_steps();

    if (*apply) {
      auto host = load_aut(model_path);
      auto sys = load_rules(rules_path);
      // Normal forms, plus the LTSs sitting at the bound when it was hit:
      // a rule that recreates its own pattern never reaches a normal form,
      // and --max-steps 1 then shows the one-step result.
      ltsconf::ExploreOptions explore_options;
      explore_options.max_steps = steps;
      auto run = ltsconf::explore(host, sys, explore_options);
      ltsconf::NormalForms forms;
      forms.exhausted = run.exhausted;
      for (auto& r : run.reducts) {
        if (r.normal || (run.exhausted && r.depth == steps)) forms.forms.push_back(std::move(r));
      }
      if (!out_file.empty() && forms.forms.size() == 1 && format == ltsconf::ReportFormat::text) {
        write_output(ltsconf::write_aut(forms.forms.front().lts), out_file);
      } else {
        write_output(ltsconf::emit_normal_forms(forms, format), out_file);
      }
      if (forms.exhausted) {
        std::cerr << "step bound " << steps << " reached; the result is incomplete\n";
        return kInconclusive;
      }
      if (forms.forms.size() != 1) {
        std::cerr << forms.forms.size() << " distinct normal forms\n";
        return kNotConfluent;
      }
      return kOk;
    }

    auto sys = load_rules(rules_path);

    if (*detect || *oracle) {
      std::vector<std::pair<std::size_t, std::size_t>> todo;
      if (!pair_spec.empty()) {
        auto comma = pair_spec.find(',');
        if (comma == std::string::npos) throw ltsconf::Error("--pair expects A,B");
        auto a = sys.find(pair_spec.substr(0, comma));
        auto b = sys.find(pair_spec.substr(comma + 1));
        if (!a || !b) throw ltsconf::Error("unknown rule in --pair " + pair_spec);
        todo.emplace_back(a - sys.rules.data(), b - sys.rules.data());
      } else {
        for (std::size_t i = 0; i < sys.rules.size(); ++i) {
          for (std::size_t j = i; j < sys.rules.size(); ++j) todo.emplace_back(i, j);
        }
      }
      std::vector<ltsconf::CriticalPair> pairs;
      for (auto [i, j] : todo) {
        auto found = *detect ? ltsconf::detect_critical_pairs(sys.rules[i], sys.rules[j])
                             : ltsconf::oracle::oracle_critical_pairs(sys.rules[i], sys.rules[j]);
        pairs.insert(pairs.end(), found.begin(), found.end());
      }
      std::cout << ltsconf::emit_pairs(pairs, format);
      return kOk;
    }

    ltsconf::ConfluenceOptions options;
    options.max_steps = steps;
    options.mode = *resolve || mode_name == "exhaustive" ? ltsconf::CheckMode::exhaustive
                                                         : ltsconf::CheckMode::eager;
    auto report = ltsconf::check_confluence(sys, options);
    std::cout << ltsconf::emit_report(report, format);
    return exit_for(report.verdict);
  } catch (const ltsconf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
