// acceptance criteria tests are added as the implementation lands
