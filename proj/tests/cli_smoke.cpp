// End-to-end checks of the CLI surface: exact output lines and the
// exit-code contract (0 ok, 1 violation/budget/target, 2 bad input).
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;
int g_failures = 0;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string file(const std::string& name, const std::string& body) {
  fs::path p = g_dir / name;
  std::ofstream(p) << body;
  return p.string();
}

void expect(bool ok, const std::string& label) {
  std::cout << (ok ? "ok" : "FAILED") << ": " << label << "\n";
  if (!ok) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_smoke <path-to-rfeq-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  std::string tmpl = (fs::temp_directory_path() / "rfeq-cli-XXXXXX").string();
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  if (!mkdtemp(buf.data())) return 2;
  g_dir = buf.data();

  std::string pres = file("t.pres", "gens a b\nrel a^-1 b^-1 a b\n");
  std::string torsion = file("t3.pres", "gens a\nrel a^3\n");
  std::string zz = file("zz.sub", "factor abelian x\ngen x\ngen x\n");
  std::string diag = file("diag.sub",
                          "factor free a b\nfactor free a b\n"
                          "gen a | a\ngen b | b\n");
  std::string mixed = file("mixed.sub",
                           "factor free a b\nfactor abelian x\n"
                           "gen a | 1\ngen b | 1\ngen 1 | x\n");

  CliResult r = run_cli("b1 " + pres);
  expect(r.exit_code == 0 && r.out == "b1 = 2\ndiagonal = ()\n",
         "b1 output on a commutator relator");
  r = run_cli("b1 " + torsion);
  expect(r.exit_code == 0 && r.out == "b1 = 0\ndiagonal = (3)\n",
         "b1 output with torsion");

  r = run_cli("trivial " + zz + " --word \"s1 s2^-1\"");
  expect(r.exit_code == 0 && r.out == "yes\n", "trivial yes");
  r = run_cli("trivial " + zz + " --word s1");
  expect(r.exit_code == 0 && r.out == "no\n", "trivial no");
  r = run_cli("central " + mixed + " --word s3");
  expect(r.exit_code == 0 && r.out == "yes\n", "central yes");
  r = run_cli("central " + diag + " --word s1");
  expect(r.exit_code == 0 && r.out == "no\n", "central no");

  r = run_cli("present " + diag + " --factor 1");
  expect(r.exit_code == 0 &&
             r.out.find("# basis rank = 2\n") != std::string::npos &&
             r.out.find("gens s1 s2\n") != std::string::npos,
         "present on a basis projection");
  r = run_cli("present " + mixed + " --factor 2");
  expect(r.exit_code == 2, "present on a free-abelian factor is rejected");
  r = run_cli("present " + diag + " --factor 3");
  expect(r.exit_code == 2, "present with out-of-range factor");

  r = run_cli("verify " + diag + " --samples 200 --maxlen 4 --seed 9");
  expect(r.exit_code == 0 && r.out.find("violations = 0\n") != std::string::npos,
         "verify clean run");
  CliResult again = run_cli("verify " + diag + " --samples 200 --maxlen 4 --seed 9");
  expect(again.out == r.out, "verify output is deterministic per seed");
  r = run_cli("verify " + mixed + " --samples 100 --maxlen 3 --seed 4");
  expect(r.exit_code == 0 &&
             r.out.find("# factorization: skipped") != std::string::npos &&
             r.out.find("violations = 0\n") != std::string::npos,
         "verify skips the factorization check below two kept factors");

  r = run_cli("defeq " + zz + " --b1 5");
  expect(r.exit_code == 1, "inconsistent b1 target exits 1");
  r = run_cli("defeq " + diag + " --b1 1 --budget 100");
  expect(r.exit_code == 1 &&
             r.out.find("# terminated = false\n") != std::string::npos &&
             r.out.find("# scanned = 100\n") != std::string::npos,
         "budget exhaustion exits 1 and reports the partial state");

  r = run_cli("b1 " + (g_dir / "missing.pres").string());
  expect(r.exit_code == 2, "missing file exits 2");
  std::string bad = file("bad.sub", "factor free a\ngen c\n");
  r = run_cli("naeq " + bad);
  expect(r.exit_code == 2, "parse failure exits 2");
  r = run_cli("nonsense");
  expect(r.exit_code == 2, "unknown subcommand exits 2");

  std::error_code ec;
  fs::remove_all(g_dir, ec);
  if (g_failures) {
    std::cout << g_failures << " cli checks failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
