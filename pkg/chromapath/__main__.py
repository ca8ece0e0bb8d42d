from chromapath.cli import main

main()
