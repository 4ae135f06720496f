// Placeholder; the CLI is assembled once the library modules are in place.
int main() { return 0; }
