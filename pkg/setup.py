from setuptools import setup


requirements = {
    'install': [
        'numpy',
        'sympy>=1.7',
    ],
    'stylecheck': [
        'autopep8',
        'hacking',
    ],
    'test': [
        'pytest',
    ],
    'travis': [
        '-r stylecheck',
        '-r test',
        'pytest-cov',
        'codecov',
    ],
}


def reduce_requirements(key):
    # Resolve recursive requirements notation (-r)
    reqs = requirements[key]
    resolved_reqs = []
    for req in reqs:
        if req.startswith('-r'):
            depend_key = req[2:].lstrip()
            reduce_requirements(depend_key)
            resolved_reqs += requirements[depend_key]
        else:
            resolved_reqs.append(req)
    requirements[key] = resolved_reqs


for k in requirements.keys():
    reduce_requirements(k)


setup(
    name='qmock',
    packages=[
        'qmock',
        'qmock.mockforms',
        'qmock.testing',
    ],
    version='0.1.0',
    description='Exact Fourier coefficients of unary theta functions and '
    'explicit mock modular forms',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    keywords='mock modular forms theta functions Hurwitz class numbers '
    'exact arithmetic',
    python_requires='>=3.8',
    install_requires=requirements['install'],
    tests_require=requirements['test'],
    extras_require={k: v for k, v in requirements.items() if k != 'install'},
    entry_points={
        'console_scripts': ['qmock = qmock.cli:main'],
    },
    license='MIT License',
)
