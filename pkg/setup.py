from setuptools import setup, find_packages

setup(
    name='factum',
    version='0.1.0',
    packages=find_packages(exclude=['test']),
    include_package_data=True,
    package_data={
        # If any package contains *.lark files, include them:
        "": ["*.lark"],
    },
    python_requires='>=3.8',
    install_requires=[
        'lark>=1.1',
        'click>=8.0',
        'nltk>=3.6',
    ],
    entry_points={
        'console_scripts': ['factum = factum.cli:main'],
    },
)
