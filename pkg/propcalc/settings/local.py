# Machine-specific overrides, imported last by settings/__init__.py.
