from codegree.cli import main

main()
