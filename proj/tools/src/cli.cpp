/*
 * Copyright 2026 The mpcodes Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mpcodes/version.hpp"

namespace mpcodes::cli {

namespace {

const std::vector<OptionInfo>& CommonOptions() {
  static const std::vector<OptionInfo> common = {
      {"scheme", "scheme spec, e.g. mp:K=2,M=3,L=2,T=3,D=1 or ggasp:K=5,M=2,L=5,T=4,r=opt"},
      {"field", "field spec p, p^r or p^r/c0,...,cr (default 2^61-1)"},
      {"format", "csv, json or text"},
      {"seed", "RNG seed (default 1)"},
      {"budget", "search or enumeration cap"},
      {"output", "write the result here instead of stdout"},
  };
  return common;
}

struct Bound {
  const CommandInfo* info = nullptr;
  CLI::App* app = nullptr;
  std::string config_path;
  bool print_config = false;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::map<std::string, CLI::Option*> options;
};

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular polynomial and GGASP codes for secure distributed matrix multiplication",
               "mpcodes"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(0, 1);
  std::string top_config;
  bool top_print = false;
  app.add_option("--config", top_config, "key = value file; flags override it");
  app.add_flag("--print-config", top_print, "print the canonical run config and exit");

  std::vector<Bound> bound;
  bound.reserve(Commands().size());
  for (const CommandInfo& info : Commands()) {
    Bound& b = bound.emplace_back();
    b.info = &info;
    b.app = app.add_subcommand(info.name, info.help);
    b.app->add_option("--config", b.config_path, "key = value file; flags override it");
    b.app->add_flag("--print-config", b.print_config, "print the canonical run config and exit");
    std::vector<OptionInfo> all = CommonOptions();
    all.insert(all.end(), info.options.begin(), info.options.end());
    for (const OptionInfo& o : all) {
      if (o.flag) {
        b.options[o.name] = b.app->add_flag("--" + o.name, b.flags[o.name], o.help);
      } else {
        const std::string names = o.name == "output" ? "-o,--output" : "--" + o.name;
        b.options[o.name] = b.app->add_option(names, b.values[o.name], o.help);
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  Bound* selected = nullptr;
  for (Bound& b : bound) {
    if (b.app->parsed()) selected = &b;
  }

  try {
    RunConfig config;
    const std::string path = selected != nullptr && !selected->config_path.empty() ? selected->config_path
                                                                                    : top_config;
    if (!path.empty()) {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorCode::kIoError, "cannot open config '" + path + "'");
      std::ostringstream text;
      text << file.rdbuf();
      config = ParseRunConfig(text.str());
    }
    if (selected != nullptr) config.subcommand = selected->info->name;
    if (config.subcommand.empty()) {
      err << app.help();
      return kExitBadConfig;
    }
    const CommandInfo* info = FindCommand(config.subcommand);
    if (info == nullptr) throw Error(ErrorCode::kParseError, "unknown subcommand '" + config.subcommand + "'");

    std::set<std::string> known;
    for (const OptionInfo& o : info->options) known.insert(o.name);
    for (const auto& [key, value] : config.options) {
      if (known.count(key) == 0) {
        throw Error(ErrorCode::kParseError, "'" + key + "' is not an option of " + info->name);
      }
    }
    bool print = top_print;
    if (selected != nullptr) {
      print = print || selected->print_config;
      for (const auto& [name, opt] : selected->options) {
        if (opt->count() == 0) continue;
        config.Set(name, selected->flags.count(name) ? (selected->flags[name] ? "true" : "false")
                                                     : selected->values[name]);
      }
    }
    if (print) {
      out << SerializeRunConfig(config);
      return kExitOk;
    }
    return RunCommand(config, out, err);
  } catch (const Error& e) {
    err << "mpcodes: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
}

}  // namespace mpcodes::cli
