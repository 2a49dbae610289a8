#include <divcalc/cli.hpp>

int main(int argc, char** argv) { return divcalc::cli::main(argc, argv); }
