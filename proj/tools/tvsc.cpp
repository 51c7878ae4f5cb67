#include "commands.hpp"

int main(int argc, char** argv) { return tvsc::cli::run(argc, argv); }
