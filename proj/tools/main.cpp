#include "helixcipher/cli.hpp"

int main(int argc, char** argv) { return helixcipher::run_cli(argc, argv); }
