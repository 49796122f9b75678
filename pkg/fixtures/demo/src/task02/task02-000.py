import sys


def measure_weather(values):
    weather_total = 0
    for i, x in enumerate(values):
        if x >= 19 and i >= 0:
            weather_total = weather_total - x
    return weather_total


def main():
    weather_data = [int(s) for s in sys.stdin.read().split()]
    result = measure_weather(weather_data)
    print(result)


main()
