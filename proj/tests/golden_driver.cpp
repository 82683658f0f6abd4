// Runs every case of cases.txt through the command line tool, twice, and
// compares exit status and standard output byte for byte with <name>.json.
// With --update the golden files are rewritten instead.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Case {
  std::string name;
  int exit_code;
  std::string args;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<Case> load(const fs::path& file) {
  std::ifstream in(file);
  std::vector<Case> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto a = line.find('|'), b = line.find('|', a + 1);
    if (a == std::string::npos || b == std::string::npos) throw std::runtime_error("bad case line: " + line);
    out.push_back({trim(line.substr(0, a)), std::stoi(trim(line.substr(a + 1, b - a - 1))), trim(line.substr(b + 1))});
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int invoke(const std::string& cli, const Case& c, const fs::path& out) {
  const std::string cmd = "\"" + cli + "\" " + c.args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_driver <cli> <golden dir> [--update]\n";
    return 1;
  }
  const std::string cli = argv[1];
  const fs::path dir = argv[2];
  const bool update = argc > 3 && std::string(argv[3]) == "--update";
  const fs::path tmp = fs::temp_directory_path() / ("golden_" + std::to_string(::getpid()));
  fs::create_directories(tmp);

  int failures = 0;
  for (const Case& c : load(dir / "cases.txt")) {
    const fs::path first = tmp / (c.name + ".1"), second = tmp / (c.name + ".2");
    const int code = invoke(cli, c, first);
    const fs::path golden = dir / (c.name + ".json");
    std::string problem;
    if (code != c.exit_code) {
      problem = "exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code);
    } else if (update) {
      if (c.exit_code != 1) fs::copy_file(first, golden, fs::copy_options::overwrite_existing);
    } else {
      const std::string got = slurp(first);
      if (invoke(cli, c, second) != code || slurp(second) != got) problem = "output differs between two runs";
      else if (c.exit_code == 1 && !got.empty()) problem = "usage error wrote a document";
      else if (c.exit_code != 1 && !fs::exists(golden)) problem = "missing " + golden.filename().string();
      else if (c.exit_code != 1 && slurp(golden) != got) problem = "differs from " + golden.filename().string();
    }
    std::cout << (problem.empty() ? "ok   " : "FAIL ") << c.name << (problem.empty() ? "" : ": " + problem) << "\n";
    if (!problem.empty()) ++failures;
  }
  fs::remove_all(tmp);
  std::cout << failures << " failure(s)\n";
  return failures ? 1 : 0;
}
