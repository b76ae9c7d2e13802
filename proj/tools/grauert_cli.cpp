#include "grauert/cli/run.hpp"

int main(int argc, char** argv) { return grauert::cli::main_entry(argc, argv); }
