from nilpoly.cli import main

main()
