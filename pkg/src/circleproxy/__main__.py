from .cli_app import main

raise SystemExit(main())
